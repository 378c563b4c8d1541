//! Simultaneous eigenvectors of commuting operators.

use super::matrix::{Matrix, Subspace};
use super::poly::{charpoly, roots_in_field};
use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// A common eigenspace: `generators[i]·v = eigenvalues[i]·v` for every `v`
/// in the span of `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointEigenspace {
    pub eigenvalues: Vec<Scalar>,
    pub basis: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, Default)]
pub struct CharacterSearch {
    pub systems: Vec<JointEigenspace>,
    /// One entry per skipped branch whose characteristic polynomial kept a
    /// factor without roots in the base field.
    pub warnings: Vec<String>,
}

/// Splits the ambient space into common eigenspaces of pairwise commuting
/// square matrices, keeping only eigenvalues that lie in the base field.
///
/// Systems are ordered lexicographically by eigenvalue tuple.
pub fn linear_characters(field: FieldSpec, dim: usize, generators: &[Matrix]) -> Result<CharacterSearch> {
    for (i, g) in generators.iter().enumerate() {
        if g.rows() != dim || g.cols() != dim {
            return Err(Error::Dimension(format!("generator {i} is {}x{}, expected {dim}x{dim}", g.rows(), g.cols())));
        }
    }
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            if generators[i].mul(&generators[j]) != generators[j].mul(&generators[i]) {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    let mut out = CharacterSearch::default();
    if dim == 0 {
        return Ok(out);
    }
    let start: Vec<Vec<Scalar>> = Matrix::identity(field, dim).to_rows();
    split(field, start, generators.to_vec(), Vec::new(), &mut out);
    Ok(out)
}

/// `basis` spans the current subspace in ambient coordinates; `ops` are the
/// not-yet-processed generators restricted to that subspace.
fn split(field: FieldSpec, basis: Vec<Vec<Scalar>>, ops: Vec<Matrix>, prefix: Vec<Scalar>, out: &mut CharacterSearch) {
    let Some((op, rest)) = ops.split_first() else {
        out.systems.push(JointEigenspace { eigenvalues: prefix, basis });
        return;
    };
    let d = op.rows();
    if let Some(c) = scalar_multiple(op) {
        let mut prefix = prefix;
        prefix.push(c);
        split(field, basis, rest.to_vec(), prefix, out);
        return;
    }
    let split_roots = roots_in_field(&charpoly(op));
    if split_roots.residual_degree > 0 {
        out.warnings.push(format!(
            "degree-{} factor without roots in {field} skipped (generator {}, subspace dimension {d})",
            split_roots.residual_degree,
            prefix.len()
        ));
    }
    for r in split_roots.roots {
        let eig = Subspace::kernel_of(&op.shift(&r));
        let restricted: Vec<Matrix> = rest
            .iter()
            .map(|b| {
                let cols: Vec<Vec<Scalar>> = eig.basis().iter().map(|v| eig.coords(&b.mul_vec(v))).collect();
                Matrix::from_columns(field, eig.dim(), &cols)
            })
            .collect();
        let new_basis: Vec<Vec<Scalar>> = eig
            .basis()
            .iter()
            .map(|y| {
                let mut v = vec![field.zero(); basis[0].len()];
                for (c, b) in y.iter().zip(&basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (o, x) in v.iter_mut().zip(b) {
                        *o += &(c * x);
                    }
                }
                v
            })
            .collect();
        let mut prefix = prefix.clone();
        prefix.push(r);
        split(field, new_basis, restricted, prefix, out);
    }
}

fn scalar_multiple(m: &Matrix) -> Option<Scalar> {
    let c = m[(0, 0)].clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let expected = i == j;
            if (expected && m[(i, j)] != c) || (!expected && !m[(i, j)].is_zero()) {
                return None;
            }
        }
    }
    Some(c)
}
