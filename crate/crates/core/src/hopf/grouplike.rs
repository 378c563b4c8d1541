use std::collections::HashMap;

use super::{convolve, dual, pair, HopfAlgebra, Tensor};
use crate::error::{Error, Result};
use crate::linalg::{linear_characters, Matrix, Scalar, Subspace};

/// A finite group of grouplike elements (or of characters), with its
/// multiplication table. Index 0 is always the identity; the remaining
/// elements are in lexicographic coordinate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeSet {
    pub elements: Vec<Vec<Scalar>>,
    /// `table[i][j]` is the index of `elements[i]·elements[j]`.
    pub table: Vec<Vec<usize>>,
    pub inverses: Vec<usize>,
    /// Branches skipped because eigenvalues left the base field. Non-empty
    /// warnings mean elements defined only over an extension may be missing.
    pub warnings: Vec<String>,
}

impl GrouplikeSet {
    fn build(
        mut elements: Vec<Vec<Scalar>>,
        identity: Vec<Scalar>,
        product: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
        warnings: Vec<String>,
    ) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let Some(pos) = elements.iter().position(|e| *e == identity) else {
            return Err(Error::Construction("identity missing from the grouplike set".into()));
        };
        let id = elements.remove(pos);
        elements.insert(0, id);
        let index: HashMap<&Vec<Scalar>, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = Vec::with_capacity(elements.len());
        for a in &elements {
            let mut row = Vec::with_capacity(elements.len());
            for b in &elements {
                let ab = product(a, b);
                let Some(&k) = index.get(&ab) else {
                    return Err(Error::Construction("grouplike set is not closed under multiplication".into()));
                };
                row.push(k);
            }
            table.push(row);
        }
        let mut inverses = Vec::with_capacity(elements.len());
        for row in &table {
            let Some(j) = row.iter().position(|&k| k == 0) else {
                return Err(Error::Construction("grouplike without inverse".into()));
            };
            inverses.push(j);
        }
        Ok(GrouplikeSet { elements, table, inverses, warnings })
    }

    /// Builds the group from explicit elements of `h`, verifying each one.
    pub fn from_elements(h: &HopfAlgebra, elements: Vec<Vec<Scalar>>, warnings: Vec<String>) -> Result<Self> {
        if let Some(i) = elements.iter().position(|x| !is_grouplike(h, x)) {
            return Err(Error::Construction(format!("element {i} is not grouplike")));
        }
        Self::build(elements, h.unit().to_vec(), |a, b| h.mul(a, b), warnings)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, v: &[Scalar]) -> Option<usize> {
        self.elements.iter().position(|e| e.as_slice() == v)
    }

    pub fn square(&self, i: usize) -> usize {
        self.table[i][i]
    }

    pub fn order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.table[cur][i];
            k += 1;
        }
        k
    }

    /// Elements commuting with every other element.
    pub fn center(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| self.table[i][j] == self.table[j][i])).collect()
    }
}

/// Algebra homomorphisms `A → k`, as functionals in dual coordinates, plus
/// warnings for eigenvalues outside the base field.
///
/// Characters vanish on the two-sided ideal `I` generated by commutators, so
/// they live in `I^⊥ ⊂ A*`. That subspace is invariant under the transposed
/// multiplication operators, which commute there; each joint eigenvalue
/// tuple of `φ ↦ φ(e_i ·)` is itself a character.
pub fn algebra_characters(h: &HopfAlgebra) -> Result<(Vec<Vec<Scalar>>, Vec<String>)> {
    let n = h.dim();
    let field = h.field();
    let mut space = Subspace::full(field, n);
    for j in 0..n {
        for k in j + 1..n {
            let row = commutator(h, j, k);
            if !row.is_empty() {
                space.restrict_by_row(&row);
            }
        }
    }
    // Largest subspace invariant under both transposed multiplications.
    loop {
        let before = space.dim();
        if before == 0 || before == n {
            break;
        }
        for i in 0..n {
            for left in [true, false] {
                if space.dim() == 0 {
                    break;
                }
                let residuals: Vec<Vec<Scalar>> = space
                    .basis()
                    .iter()
                    .map(|phi| {
                        let t = transposed_mul(h, i, phi, left);
                        let back = space.combine(&space.coords(&t));
                        t.iter().zip(&back).map(|(a, b)| a - b).collect()
                    })
                    .collect();
                if residuals.iter().all(|r| r.iter().all(Scalar::is_zero)) {
                    continue;
                }
                let m = Matrix::from_columns(field, n, &residuals);
                space.restrict_in_coords(&m);
            }
        }
        if space.dim() == before {
            break;
        }
    }
    if space.dim() == 0 {
        return Err(Error::Construction("no functional annihilates the commutator ideal".into()));
    }
    let ops: Vec<Matrix> = (0..n)
        .map(|i| {
            let cols: Vec<Vec<Scalar>> =
                space.basis().iter().map(|phi| space.coords(&transposed_mul(h, i, phi, true))).collect();
            Matrix::from_columns(field, space.dim(), &cols)
        })
        .collect();
    let search = linear_characters(field, space.dim(), &ops)?;
    let mut chars = Vec::with_capacity(search.systems.len());
    for sys in search.systems {
        if sys.basis.len() != 1 {
            return Err(Error::Construction(format!(
                "joint eigenspace of dimension {} in the abelianized dual",
                sys.basis.len()
            )));
        }
        chars.push(sys.eigenvalues);
    }
    for chi in &chars {
        verify_character(h, chi)?;
    }
    Ok((chars, search.warnings))
}

fn commutator(h: &HopfAlgebra, j: usize, k: usize) -> Vec<(usize, Scalar)> {
    let mut v = h.zero();
    for (m, c) in h.mul_basis(j, k) {
        v[*m] += c;
    }
    for (m, c) in h.mul_basis(k, j) {
        v[*m] -= c;
    }
    crate::linalg::to_sparse(&v)
}

/// `φ ↦ φ(e_i ·)` (left) or `φ ↦ φ(· e_i)` (right).
fn transposed_mul(h: &HopfAlgebra, i: usize, phi: &[Scalar], left: bool) -> Vec<Scalar> {
    (0..h.dim())
        .map(|t| {
            let prod = if left { h.mul_basis(i, t) } else { h.mul_basis(t, i) };
            let mut acc = h.field().zero();
            for (k, c) in prod {
                if !phi[*k].is_zero() {
                    acc += &(c * &phi[*k]);
                }
            }
            acc
        })
        .collect()
}

fn verify_character(h: &HopfAlgebra, chi: &[Scalar]) -> Result<()> {
    if !pair(h.field(), chi, h.unit()).is_one() {
        return Err(Error::Construction("character does not send 1 to 1".into()));
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let mut lhs = h.field().zero();
            for (k, c) in h.mul_basis(i, j) {
                lhs += &(c * &chi[*k]);
            }
            if lhs != &chi[i] * &chi[j] {
                return Err(Error::Construction(format!("character not multiplicative on ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// Algebra characters `H → k`, forming the group `G(H*)` under convolution.
pub fn characters(h: &HopfAlgebra) -> Result<GrouplikeSet> {
    let (chars, warnings) = algebra_characters(h)?;
    GrouplikeSet::build(chars, h.counit().to_vec(), |f, g| convolve(h, f, g), warnings)
}

/// Grouplike elements `G(H) = {x : Δx = x⊗x, ε(x) = 1}`, found as the
/// algebra characters of the dual and re-verified by substitution.
pub fn grouplikes(h: &HopfAlgebra) -> Result<GrouplikeSet> {
    let (elements, warnings) = algebra_characters(&dual(h))?;
    for x in &elements {
        if !is_grouplike(h, x) {
            return Err(Error::Construction("character of the dual is not grouplike".into()));
        }
    }
    GrouplikeSet::build(elements, h.unit().to_vec(), |a, b| h.mul(a, b), warnings)
}

pub(crate) fn is_grouplike(h: &HopfAlgebra, x: &[Scalar]) -> bool {
    h.counit_of(x).is_one() && h.comult_of(x) == Tensor::pure(h.field(), [x, x])
}

pub(crate) fn is_character(h: &HopfAlgebra, chi: &[Scalar]) -> bool {
    verify_character(h, chi).is_ok()
}
