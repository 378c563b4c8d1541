//! Hopf algebras given by structure constants relative to an ordered basis.
//!
//! Conventions for a basis `e_0, …, e_{n-1}`:
//!
//! * `e_i·e_j = Σ_k mult[i][j][k] e_k`
//! * `Δ(e_i) = Σ_{j,k} comult[i][j][k] e_j ⊗ e_k`
//! * `S(e_c) = Σ_r antipode[r][c] e_r` (the antipode matrix acts on column
//!   coordinate vectors)
//!
//! Elements are dense coordinate vectors. Functionals on the algebra (elements
//! of the dual) are coordinate vectors in the dual basis `f_i(e_j) = δ_ij`.

mod construct;
mod grouplike;
mod hit;
mod tensor;
mod validate;

use std::sync::OnceLock;

pub use construct::{cop, dual, op};
pub use grouplike::{algebra_characters, characters, grouplikes, GrouplikeSet};
pub(crate) use grouplike::{is_character, is_grouplike};
pub use hit::{convolve, hit_left, hit_right};
pub use tensor::Tensor;
pub use validate::{validate_axioms, Axiom, AxiomFailure, ValidationReport};

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Sparse};

/// Raw structure constants, prior to any checks.
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub name: String,
    pub field: FieldSpec,
    pub basis: Vec<String>,
    /// `mult[i * n + j]` is the sparse product `e_i·e_j`.
    pub mult: Vec<Sparse>,
    pub unit: Vec<Scalar>,
    /// `comult[i]` lists `(j, k, c)` with `Δ(e_i) = Σ c·e_j⊗e_k`.
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

/// A finite-dimensional Hopf algebra whose tensors have consistent shapes.
///
/// The Hopf axioms themselves are checked by [`validate_axioms`]; use
/// [`HopfAlgebra::validated`] to obtain an instance that passed them.
#[derive(Debug)]
pub struct HopfAlgebra {
    name: String,
    field: FieldSpec,
    basis: Vec<String>,
    mult: Vec<Sparse>,
    unit: Vec<Scalar>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    antipode_inv: OnceLock<Option<Matrix>>,
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        HopfAlgebra {
            name: self.name.clone(),
            field: self.field,
            basis: self.basis.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            antipode_inv: OnceLock::new(),
        }
    }
}

impl PartialEq for HopfAlgebra {
    /// Structure constants only; the name is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.basis.len() == other.basis.len()
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

fn check_scalar_field(field: FieldSpec, s: &Scalar, what: &str) -> Result<()> {
    if s.field() != field {
        return Err(Error::Schema { path: what.into(), message: format!("scalar {s} is not in {field}") });
    }
    Ok(())
}

impl HopfAlgebra {
    /// Shape checks only.
    pub fn from_parts(parts: HopfParts) -> Result<Self> {
        let n = parts.basis.len();
        let shape = |path: &str, message: String| Err(Error::Schema { path: path.into(), message });
        if n == 0 {
            return shape("$.dim", "dimension must be positive".into());
        }
        if parts.mult.len() != n * n {
            return shape("$.mult", format!("expected {} products, found {}", n * n, parts.mult.len()));
        }
        for (ij, prod) in parts.mult.iter().enumerate() {
            let path = format!("$.mult[{}][{}]", ij / n, ij % n);
            let mut last = None;
            for (k, c) in prod {
                if *k >= n || last.is_some_and(|l| l >= *k) || c.is_zero() {
                    return shape(&path, "malformed sparse product".into());
                }
                check_scalar_field(parts.field, c, &path)?;
                last = Some(*k);
            }
        }
        if parts.comult.len() != n {
            return shape("$.comult", format!("expected {n} coproducts, found {}", parts.comult.len()));
        }
        for (i, terms) in parts.comult.iter().enumerate() {
            for (j, k, c) in terms {
                if *j >= n || *k >= n {
                    return shape(&format!("$.comult[{i}]"), "index out of range".into());
                }
                check_scalar_field(parts.field, c, &format!("$.comult[{i}]"))?;
            }
        }
        for (path, v) in [("$.unit", &parts.unit), ("$.counit", &parts.counit)] {
            if v.len() != n {
                return shape(path, format!("expected length {n}, found {}", v.len()));
            }
            for s in v {
                check_scalar_field(parts.field, s, path)?;
            }
        }
        if parts.antipode.rows() != n || parts.antipode.cols() != n {
            return shape(
                "$.antipode",
                format!("expected {n}x{n}, found {}x{}", parts.antipode.rows(), parts.antipode.cols()),
            );
        }
        if parts.antipode.field() != parts.field {
            return shape("$.antipode", "field mismatch".into());
        }
        let mut comult = parts.comult;
        for terms in comult.iter_mut() {
            terms.retain(|(_, _, c)| !c.is_zero());
            terms.sort_by_key(|(j, k, _)| (*j, *k));
            for w in 1..terms.len() {
                if (terms[w - 1].0, terms[w - 1].1) == (terms[w].0, terms[w].1) {
                    return shape("$.comult", "duplicate term".into());
                }
            }
        }
        Ok(HopfAlgebra {
            name: parts.name,
            field: parts.field,
            basis: parts.basis,
            mult: parts.mult,
            unit: parts.unit,
            comult,
            counit: parts.counit,
            antipode: parts.antipode,
            antipode_inv: OnceLock::new(),
        })
    }

    /// Shape checks followed by the full axiom suite.
    pub fn validated(parts: HopfParts) -> Result<Self> {
        let h = Self::from_parts(parts)?;
        let report = validate_axioms(&h);
        if report.passed() {
            Ok(h)
        } else {
            Err(Error::Axioms(report))
        }
    }

    pub fn into_parts(self) -> HopfParts {
        HopfParts {
            name: self.name,
            field: self.field,
            basis: self.basis,
            mult: self.mult,
            unit: self.unit,
            comult: self.comult,
            counit: self.counit,
            antipode: self.antipode,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.dim() + j]
    }

    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// `S⁻¹`, or `None` when the antipode matrix is singular.
    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        self.antipode_inv
            .get_or_init(|| self.antipode.inverse().expect("square antipode"))
            .as_ref()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    pub fn mul_sparse(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.mul_basis(*i, *j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j) {
                    m[(*k, j)] += &(a * c);
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.mul_basis(j, i) {
                    m[(*k, j)] += &(a * c);
                }
            }
        }
        m
    }

    /// Two-sided inverse of `x`, if it exists.
    pub fn inverse(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let y = self.left_mul_matrix(x).solve(&self.unit).ok()??;
        (self.mul(&y, x) == self.unit).then_some(y)
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(x)
    }

    pub fn antipode_inverse_of(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        self.antipode_inverse().map(|m| m.mul_vec(x))
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        pair(self.field, &self.counit, x)
    }

    pub fn comult_of(&self, x: &[Scalar]) -> Tensor<2> {
        let mut t = Tensor::zero(self.field);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                t.add_term([*j, *k], &(a * c));
            }
        }
        t
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult.iter().all(|terms| {
            let t: Tensor<2> = {
                let mut t = Tensor::zero(self.field);
                for (j, k, c) in terms {
                    t.add_term([*j, *k], c);
                }
                t
            };
            t == t.flip()
        })
    }

    /// `(Δ ⊗ id)` applied to an element of `A⊗A`.
    pub fn comult_left(&self, t: &Tensor<2>) -> Tensor<3> {
        let mut out = Tensor::zero(self.field);
        for ([i, j], c) in t.terms() {
            for (a, b, d) in &self.comult[*i] {
                out.add_term([*a, *b, *j], &(c * d));
            }
        }
        out
    }

    /// `(id ⊗ Δ)` applied to an element of `A⊗A`.
    pub fn comult_right(&self, t: &Tensor<2>) -> Tensor<3> {
        let mut out = Tensor::zero(self.field);
        for ([i, j], c) in t.terms() {
            for (a, b, d) in &self.comult[*j] {
                out.add_term([*i, *a, *b], &(c * d));
            }
        }
        out
    }

    /// Embeds `t ∈ A⊗A` into `A⊗A⊗A` on the given legs, with `1` on the
    /// remaining leg. `legs = (0, 2)` gives `t₁₃`.
    pub fn embed(&self, t: &Tensor<2>, legs: (usize, usize)) -> Tensor<3> {
        let other = 3 - legs.0 - legs.1;
        let unit: Vec<(usize, &Scalar)> = self.unit.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut out = Tensor::zero(self.field);
        for ([i, j], c) in t.terms() {
            for (u, cu) in &unit {
                let mut idx = [0usize; 3];
                idx[legs.0] = *i;
                idx[legs.1] = *j;
                idx[other] = *u;
                out.add_term(idx, &(c * *cu));
            }
        }
        out
    }

    pub fn unit_tensor<const K: usize>(&self) -> Tensor<K> {
        Tensor::pure(self.field, [self.unit.as_slice(); K])
    }

    /// `(f ⊗ id)(t)` for a functional `f`.
    pub fn contract_left(&self, f: &[Scalar], t: &Tensor<2>) -> Vec<Scalar> {
        let mut out = self.zero();
        for ([i, j], c) in t.terms() {
            if !f[*i].is_zero() {
                out[*j] += &(&f[*i] * c);
            }
        }
        out
    }

    /// `(id ⊗ f)(t)` for a functional `f`.
    pub fn contract_right(&self, t: &Tensor<2>, f: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for ([i, j], c) in t.terms() {
            if !f[*j].is_zero() {
                out[*i] += &(&f[*j] * c);
            }
        }
        out
    }

    /// Images of the basis under the antipode, as sparse columns.
    pub fn antipode_images(&self) -> Vec<Sparse> {
        (0..self.dim()).map(|c| crate::linalg::to_sparse(&self.antipode.column(c))).collect()
    }
}

/// Dual pairing `f(x) = Σ f_i x_i`.
pub fn pair(field: FieldSpec, f: &[Scalar], x: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (a, b) in f.iter().zip(x) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}
