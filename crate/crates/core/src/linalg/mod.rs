//! Exact scalar arithmetic and dense linear algebra over `Q` and `F_p`.

mod eigen;
mod matrix;
mod poly;
mod scalar;

pub use eigen::{linear_characters, CharacterSearch, JointEigenspace};
pub use matrix::{Echelon, Matrix, Subspace};
pub use poly::{charpoly, roots_in_field, Poly, RootSplit};
pub use scalar::{FieldSpec, Scalar, MAX_CHARACTERISTIC};

pub(crate) use scalar::pow_mod;

/// Sparse coordinate vector: `(index, coefficient)` pairs sorted by index,
/// no explicit zeros.
pub type Sparse = Vec<(usize, Scalar)>;

pub fn to_sparse(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn to_dense(field: FieldSpec, dim: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (i, c) in v {
        out[*i] += c;
    }
    out
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

pub fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += x;
        }
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
