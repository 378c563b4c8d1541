//! The Drinfeld double `D(H) = H*^cop ⊗ H` with its canonical R-matrix, the
//! Drinfeld element, the monodromy and factorizability.
//!
//! Basis `f_a ⊗ e_b` sits at index `a·n + b`. The product is
//! `(p⊗a)(q⊗b) = p·(a₍₁₎⇀q↼S⁻¹(a₍₃₎)) ⊗ a₍₂₎b` with `(a⇀q)(x) = q(xa)` and
//! `(q↼a)(x) = q(ax)`, and `R = Σ_i (ε⊗e_i) ⊗ (f_i⊗1)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfParts, Tensor};
use crate::linalg::{Matrix, Scalar, Sparse, Subspace};

/// A Hopf algebra with an R-matrix and the derived data `u`, `u⁻¹`, `Q`.
#[derive(Clone, Debug)]
pub struct QuasiTriangular {
    pub algebra: HopfAlgebra,
    pub r_matrix: Tensor<2>,
    pub u: Vec<Scalar>,
    pub u_inv: Vec<Scalar>,
    pub monodromy: Tensor<2>,
    pub provenance: String,
}

/// Failed quasitriangularity identities, each with the basis index that
/// exposed it (or none for element-level identities).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QtReport {
    pub failures: Vec<(String, Option<usize>)>,
}

impl QtReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, what: &str, at: Option<usize>) {
        self.failures.push((what.to_string(), at));
    }
}

impl QuasiTriangular {
    /// Derives `u = Σ S(b_i)a_i`, its inverse and `Q = R₂₁R`.
    pub fn new(algebra: HopfAlgebra, r_matrix: Tensor<2>, provenance: impl Into<String>) -> Result<Self> {
        let u = drinfeld_element(&algebra, &r_matrix);
        let u_inv = algebra.inverse(&u).ok_or_else(|| Error::NotInvertible("Drinfeld element".into()))?;
        let monodromy = r_matrix.flip().mul(&algebra, &r_matrix);
        Ok(QuasiTriangular { algebra, r_matrix, u, u_inv, monodromy, provenance: provenance.into() })
    }
}

/// `u = Σ S(b_i)·a_i` for `R = Σ a_i ⊗ b_i`.
pub fn drinfeld_element(a: &HopfAlgebra, r: &Tensor<2>) -> Vec<Scalar> {
    let mut u = a.zero();
    for ([i, j], c) in r.terms() {
        let sb = crate::linalg::scale(&a.antipode().column(*j), c);
        crate::linalg::add_into(&mut u, &a.mul(&sb, &a.basis_vector(*i)));
    }
    u
}

/// `Q = R₂₁R`.
pub fn monodromy(qt: &QuasiTriangular) -> &Tensor<2> {
    &qt.monodromy
}

/// Builds `D(H)`. The result is not run through the axiom checker here; see
/// [`crate::hopf::validate_axioms`] and [`verify_quasitriangular`].
pub fn double(h: &HopfAlgebra) -> Result<QuasiTriangular> {
    let n = h.dim();
    let field = h.field();
    let s_inv = h.antipode_inverse().ok_or_else(|| Error::NotInvertible("antipode".into()))?.clone();
    let s_inv_images: Vec<Sparse> = (0..n).map(|c| crate::linalg::to_sparse(&s_inv.column(c))).collect();
    let big = n * n;
    let idx = |a: usize, b: usize| a * n + b;

    // Δ²(e_b) = Σ d2 e_p⊗e_q⊗e_r, via (Δ⊗id)Δ
    let d2: Vec<Vec<([usize; 3], Scalar)>> = (0..n)
        .map(|b| {
            let delta = h.comult_of(&h.basis_vector(b));
            h.comult_left(&delta).terms().map(|(k, c)| (*k, c.clone())).collect()
        })
        .collect();

    // trip[r][t][p] = S⁻¹(e_r)·e_t·e_p
    let mut trip: Vec<Sparse> = Vec::with_capacity(n * n * n);
    for r in 0..n {
        for t in 0..n {
            let left = h.mul_sparse(&s_inv_images[r], &[(t, field.one())]);
            let left = crate::linalg::to_sparse(&left);
            for p in 0..n {
                trip.push(crate::linalg::to_sparse(&h.mul_sparse(&left, &[(p, field.one())])));
            }
        }
    }
    let trip_at = |r: usize, t: usize, p: usize| &trip[(r * n + t) * n + p];

    // psi[(a, c, p, r)] = f_a · φ, φ(e_t) = coeff_c(S⁻¹(e_r) e_t e_p)
    let mut psi: BTreeMap<(usize, usize, usize, usize), Sparse> = BTreeMap::new();
    let mut psi_of = |a: usize, c: usize, p: usize, r: usize| -> Sparse {
        psi.entry((a, c, p, r))
            .or_insert_with(|| {
                let phi: Vec<Scalar> = (0..n)
                    .map(|t| {
                        trip_at(r, t, p).iter().find(|(k, _)| *k == c).map(|(_, v)| v.clone()).unwrap_or_else(|| field.zero())
                    })
                    .collect();
                let mut out = vec![field.zero(); n];
                for (y, slot) in out.iter_mut().enumerate() {
                    for (j, k, d) in h.comult_basis(y) {
                        if *j == a && !phi[*k].is_zero() {
                            *slot += &(d * &phi[*k]);
                        }
                    }
                }
                crate::linalg::to_sparse(&out)
            })
            .clone()
    };

    let mut mult: Vec<Sparse> = vec![Vec::new(); big * big];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let psis: Vec<(Sparse, usize, Scalar)> = d2[b]
                    .iter()
                    .map(|([p, q, r], coef)| (psi_of(a, c, *p, *r), *q, coef.clone()))
                    .filter(|(s, _, _)| !s.is_empty())
                    .collect();
                for d in 0..n {
                    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (s, q, coef) in &psis {
                        for (k, m) in h.mul_basis(*q, d) {
                            let cm = coef * m;
                            for (y, v) in s {
                                let e = acc.entry(idx(*y, *k)).or_insert_with(|| field.zero());
                                *e += &(&cm * v);
                            }
                        }
                    }
                    mult[idx(a, b) * big + idx(c, d)] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                }
            }
        }
    }

    // Δ(f_a⊗e_b) = Σ m[i][j][a] d[b][s][t] (f_j⊗e_s)⊗(f_i⊗e_t)
    let mut dual_comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j) {
                dual_comult[*k].push((i, j, c.clone()));
            }
        }
    }
    let mut comult = vec![Vec::new(); big];
    for a in 0..n {
        for b in 0..n {
            let terms = &mut comult[idx(a, b)];
            for (i, j, m) in &dual_comult[a] {
                for (s, t, d) in h.comult_basis(b) {
                    terms.push((idx(*j, *s), idx(*i, *t), m * d));
                }
            }
        }
    }

    let mut unit = vec![field.zero(); big];
    let mut counit = vec![field.zero(); big];
    for a in 0..n {
        for b in 0..n {
            unit[idx(a, b)] = &h.counit()[a] * &h.unit()[b];
            counit[idx(a, b)] = &h.unit()[a] * &h.counit()[b];
        }
    }

    let mut parts = HopfParts {
        name: format!("D({})", h.name()),
        field,
        basis: (0..big)
            .map(|k| format!("f[{}]⊗{}", h.basis_names()[k / n], h.basis_names()[k % n]))
            .collect(),
        mult,
        unit,
        comult,
        counit,
        antipode: Matrix::zeros(field, big, big),
    };
    let partial = HopfAlgebra::from_parts(parts.clone())?;

    // S(f⊗h) = (ε⊗S(h))·(f∘S⁻¹ ⊗ 1)
    let mut antipode = Matrix::zeros(field, big, big);
    for a in 0..n {
        let f_sinv: Vec<Scalar> = s_inv.row(a).to_vec();
        let mut right = partial.zero();
        for c in 0..n {
            if f_sinv[c].is_zero() {
                continue;
            }
            for u in 0..n {
                if !h.unit()[u].is_zero() {
                    right[idx(c, u)] += &(&f_sinv[c] * &h.unit()[u]);
                }
            }
        }
        let right = crate::linalg::to_sparse(&right);
        for b in 0..n {
            let sh = h.antipode().column(b);
            let mut left: Sparse = Vec::new();
            for e in 0..n {
                if h.counit()[e].is_zero() {
                    continue;
                }
                for (w, c) in sh.iter().enumerate() {
                    if !c.is_zero() {
                        left.push((idx(e, w), &h.counit()[e] * c));
                    }
                }
            }
            left.sort_by_key(|(k, _)| *k);
            let col = partial.mul_sparse(&left, &right);
            for (r, v) in col.into_iter().enumerate() {
                antipode[(r, idx(a, b))] = v;
            }
        }
    }
    parts.antipode = antipode;
    let d = HopfAlgebra::from_parts(parts)?;

    let mut r = Tensor::zero(field);
    for i in 0..n {
        for c in 0..n {
            if h.counit()[c].is_zero() {
                continue;
            }
            for u in 0..n {
                if !h.unit()[u].is_zero() {
                    r.add_term([idx(c, i), idx(i, u)], &(&h.counit()[c] * &h.unit()[u]));
                }
            }
        }
    }
    QuasiTriangular::new(d, r, format!("double-of({})", h.name()))
}

/// Embeds `β ⊗ ℓ` for a functional `β` on `H` and an element `ℓ ∈ H`.
pub fn embed_pair(n: usize, beta: &[Scalar], ell: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n * n);
    for b in beta {
        for l in ell {
            out.push(b * l);
        }
    }
    out
}

/// Checks both hexagon identities, naturality `RΔ(x) = Δ^op(x)R`,
/// invertibility of `R` with inverse `(S⊗id)R`, `S²(x) = u x u⁻¹`,
/// `ε(u) = 1` and `QΔ(u) = u⊗u`.
pub fn verify_quasitriangular(qt: &QuasiTriangular) -> QtReport {
    let a = &qt.algebra;
    let r = &qt.r_matrix;
    let mut report = QtReport::default();

    let r13 = a.embed(r, (0, 2));
    let r23 = a.embed(r, (1, 2));
    let r12 = a.embed(r, (0, 1));
    if a.comult_left(r) != r13.mul(a, &r23) {
        report.fail("(Δ⊗id)(R) = R13·R23", None);
    }
    if a.comult_right(r) != r13.mul(a, &r12) {
        report.fail("(id⊗Δ)(R) = R13·R12", None);
    }

    let r_bar = r.map_leg(0, &a.antipode_images());
    let one = a.unit_tensor::<2>();
    if r.mul(a, &r_bar) != one || r_bar.mul(a, r) != one {
        report.fail("R·(S⊗id)(R) = 1⊗1 = (S⊗id)(R)·R", None);
    }

    let s = a.antipode();
    let s2 = s.mul(s);
    for x in 0..a.dim() {
        let dx = a.comult_of(&a.basis_vector(x));
        if r.mul(a, &dx) != dx.flip().mul(a, r) {
            report.fail("R·Δ(x) = Δ^op(x)·R", Some(x));
            break;
        }
    }
    for x in 0..a.dim() {
        let conj = a.mul(&a.mul(&qt.u, &a.basis_vector(x)), &qt.u_inv);
        if conj != s2.column(x) {
            report.fail("S²(x) = u·x·u⁻¹", Some(x));
            break;
        }
    }
    if !a.counit_of(&qt.u).is_one() {
        report.fail("ε(u) = 1", None);
    }
    let lhs = qt.monodromy.mul(a, &a.comult_of(&qt.u));
    if lhs != Tensor::pure(a.field(), [&qt.u, &qt.u]) {
        report.fail("Q·Δ(u) = u⊗u", None);
    }
    if a.mul(&qt.u, &a.antipode_of(&qt.u)) != a.mul(&a.antipode_of(&qt.u), &qt.u) {
        report.fail("u·S(u) = S(u)·u", None);
    }
    let us = a.mul(&qt.u, &a.antipode_of(&qt.u));
    if central_defect(a, &us).is_some() {
        report.fail("u·S(u) central", None);
    }
    report
}

/// Rank of the Drinfeld map `φ ↦ (φ⊗id)(Q)`.
pub fn drinfeld_map_rank(qt: &QuasiTriangular) -> usize {
    let n = qt.algebra.dim();
    let mut m = Matrix::zeros(qt.algebra.field(), n, n);
    for ([i, j], c) in qt.monodromy.terms() {
        m[(*j, *i)] += c;
    }
    m.rank()
}

pub fn factorizable(qt: &QuasiTriangular) -> bool {
    drinfeld_map_rank(qt) == qt.algebra.dim()
}

/// First basis index `i` with `e_i·x ≠ x·e_i`.
pub fn central_defect(a: &HopfAlgebra, x: &[Scalar]) -> Option<usize> {
    (0..a.dim()).find(|&i| {
        let e = a.basis_vector(i);
        a.mul(&e, x) != a.mul(x, &e)
    })
}

/// Basis of the center: the common kernel of `x ↦ e_i·x − x·e_i`.
pub fn central_elements(a: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let mut space = Subspace::full(a.field(), n);
    for i in 0..n {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        for t in 0..n {
            let mut col: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, c) in a.mul_basis(i, t) {
                *col.entry(*k).or_insert_with(|| a.field().zero()) += c;
            }
            for (k, c) in a.mul_basis(t, i) {
                *col.entry(*k).or_insert_with(|| a.field().zero()) -= c;
            }
            for (k, c) in col {
                if !c.is_zero() {
                    rows[k].push((t, c));
                }
            }
        }
        for row in rows.into_iter().filter(|r| !r.is_empty()) {
            space.restrict_by_row(&row);
        }
    }
    space.into_basis()
}
