use std::collections::BTreeMap;

use crate::linalg::{FieldSpec, Scalar};

use super::HopfAlgebra;

/// An element of the `K`-fold tensor power of an algebra, stored sparsely
/// by basis multi-index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<const K: usize> {
    field: FieldSpec,
    terms: BTreeMap<[usize; K], Scalar>,
}

impl<const K: usize> Tensor<K> {
    pub fn zero(field: FieldSpec) -> Self {
        Tensor { field, terms: BTreeMap::new() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn add_term(&mut self, idx: [usize; K], c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize; K], &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, idx: &[usize; K]) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(*i, c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.field);
        for (i, x) in &self.terms {
            out.add_term(*i, &(x * c));
        }
        out
    }

    /// Pure tensor of dense vectors.
    pub fn pure(field: FieldSpec, factors: [&[Scalar]; K]) -> Self {
        let mut out = Self::zero(field);
        let mut idx = [0usize; K];
        fn rec<const K: usize>(
            t: usize,
            factors: &[&[Scalar]; K],
            idx: &mut [usize; K],
            coeff: Scalar,
            out: &mut Tensor<K>,
        ) {
            if t == K {
                out.add_term(*idx, &coeff);
                return;
            }
            for (i, c) in factors[t].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                idx[t] = i;
                rec(t + 1, factors, idx, &coeff * c, out);
            }
        }
        rec(0, &factors, &mut idx, field.one(), &mut out);
        out
    }

    /// Reorders legs: leg `t` of the result is leg `perm[t]` of `self`.
    pub fn permute(&self, perm: [usize; K]) -> Self {
        let mut out = Self::zero(self.field);
        for (i, c) in &self.terms {
            let mut j = [0usize; K];
            for t in 0..K {
                j[t] = i[perm[t]];
            }
            out.add_term(j, c);
        }
        out
    }

    /// Product in the tensor-power algebra `A^{⊗K}`.
    pub fn mul(&self, alg: &HopfAlgebra, other: &Self) -> Self {
        let mut out = Self::zero(self.field);
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                let coeff = ca * cb;
                let mut idx = [0usize; K];
                expand(alg, ia, ib, 0, &mut idx, coeff, &mut out);
            }
        }
        out
    }

    /// Applies a linear map on leg `leg`, given as the images of basis vectors.
    pub fn map_leg(&self, leg: usize, images: &[Vec<(usize, Scalar)>]) -> Self {
        let mut out = Self::zero(self.field);
        for (i, c) in &self.terms {
            for (j, d) in &images[i[leg]] {
                let mut idx = *i;
                idx[leg] = *j;
                out.add_term(idx, &(c * d));
            }
        }
        out
    }
}

fn expand<const K: usize>(
    alg: &HopfAlgebra,
    ia: &[usize; K],
    ib: &[usize; K],
    t: usize,
    idx: &mut [usize; K],
    coeff: Scalar,
    out: &mut Tensor<K>,
) {
    if t == K {
        out.add_term(*idx, &coeff);
        return;
    }
    for (k, c) in alg.mul_basis(ia[t], ib[t]) {
        idx[t] = *k;
        expand(alg, ia, ib, t + 1, idx, &coeff * c, out);
    }
}

impl Tensor<2> {
    pub fn flip(&self) -> Self {
        self.permute([1, 0])
    }

    /// Dense row-major coordinates, index `i·dim + j`.
    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); dim * dim];
        for ([i, j], c) in &self.terms {
            out[i * dim + j] = c.clone();
        }
        out
    }

    pub fn from_dense(field: FieldSpec, dim: usize, coords: &[Scalar]) -> Self {
        let mut out = Self::zero(field);
        for (k, c) in coords.iter().enumerate() {
            out.add_term([k / dim, k % dim], c);
        }
        out
    }
}
