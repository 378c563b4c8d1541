use super::HopfAlgebra;
use crate::linalg::Scalar;

/// `f ⇀ x = x₍₁₎ f(x₍₂₎)`
pub fn hit_left(h: &HopfAlgebra, f: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    h.contract_right(&h.comult_of(x), f)
}

/// `x ↼ f = f(x₍₁₎) x₍₂₎`
pub fn hit_right(h: &HopfAlgebra, x: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
    h.contract_left(f, &h.comult_of(x))
}

/// Convolution product on the dual: `(f∗g)(x) = f(x₍₁₎) g(x₍₂₎)`.
pub fn convolve(h: &HopfAlgebra, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    (0..h.dim())
        .map(|i| {
            let mut acc = h.field().zero();
            for (j, k, c) in h.comult_basis(i) {
                if !f[*j].is_zero() && !g[*k].is_zero() {
                    acc += &(&(c * &f[*j]) * &g[*k]);
                }
            }
            acc
        })
        .collect()
}
