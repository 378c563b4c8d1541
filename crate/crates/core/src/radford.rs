//! Integrals, the distinguished grouplikes `(a, α)` and Radford's formula
//! `S⁴(h) = a·(α⇀h↼α⁻¹)·a⁻¹`.
//!
//! Conventions: `Λ` is a left integral in `H` (`hΛ = ε(h)Λ`) and `α` is read
//! off from `Λh = α(h)Λ`; `λ` is a right integral on `H` (`λ∗f = f(1)λ`) and
//! `a` is read off from `f∗λ = f(a)λ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{convolve, hit_left, hit_right, pair, HopfAlgebra};
use crate::linalg::{is_zero_vec, Scalar, Subspace};

/// One basis index where the two sides of the S⁴ formula disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S4Witness {
    pub basis_index: usize,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadfordData {
    pub left_integral: Vec<Scalar>,
    pub right_integral_dual: Vec<Scalar>,
    pub alpha: Vec<Scalar>,
    pub a: Vec<Scalar>,
    pub s4_witnesses: Vec<S4Witness>,
}

impl RadfordData {
    pub fn s4_verified(&self) -> bool {
        self.s4_witnesses.is_empty()
    }
}

fn normalize(mut v: Vec<Scalar>) -> Vec<Scalar> {
    if let Some(lead) = v.iter().find(|c| !c.is_zero()).cloned() {
        let inv = lead.inv().expect("nonzero");
        for c in v.iter_mut() {
            *c = &*c * &inv;
        }
    }
    v
}

fn one_dimensional(space: Subspace, what: &'static str) -> Result<Vec<Scalar>> {
    if space.dim() != 1 {
        return Err(Error::IntegralDimension { what, found: space.dim() });
    }
    Ok(normalize(space.into_basis().pop().expect("one vector")))
}

/// The left integral `Λ ∈ H` and the right integral `λ ∈ H*`, normalized so
/// the first nonzero coordinate is 1.
pub fn compute_integrals(h: &HopfAlgebra) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let n = h.dim();
    let field = h.field();
    let mut left = Subspace::full(field, n);
    for i in 0..n {
        // row k of (L_i - ε_i)
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        for t in 0..n {
            for (k, c) in h.mul_basis(i, t) {
                rows[*k].push((t, c.clone()));
            }
        }
        let eps = &h.counit()[i];
        if !eps.is_zero() {
            for (k, row) in rows.iter_mut().enumerate() {
                match row.iter_mut().find(|(t, _)| *t == k) {
                    Some((_, c)) => *c -= eps,
                    None => row.push((k, -eps)),
                }
            }
        }
        for row in rows {
            if left.dim() == 0 {
                break;
            }
            left.restrict_by_row(&row);
        }
    }
    // λ∗f_i = f_i(1)λ, evaluated at e_m: Σ_j d[m][j][i] λ_j = unit_i λ_m
    let mut right = Subspace::full(field, n);
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
    for m in 0..n {
        for (j, i, c) in h.comult_basis(m) {
            rows[m * n + i].push((*j, c.clone()));
        }
    }
    for m in 0..n {
        for i in 0..n {
            let row = &mut rows[m * n + i];
            let u = &h.unit()[i];
            if !u.is_zero() {
                match row.iter_mut().find(|(t, _)| *t == m) {
                    Some((_, c)) => *c -= u,
                    None => row.push((m, -u)),
                }
            }
        }
    }
    for row in rows.iter().filter(|r| !r.is_empty()) {
        if right.dim() == 0 {
            break;
        }
        right.restrict_by_row(row);
    }
    Ok((one_dimensional(left, "left integral")?, one_dimensional(right, "right integral on H")?))
}

/// Extracts `α` from `Λh = α(h)Λ` and `a` from `f∗λ = f(a)λ`, then checks
/// both defining identities on every basis element.
pub fn distinguished_grouplikes(h: &HopfAlgebra, big_lambda: &[Scalar], lambda: &[Scalar]) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let n = h.dim();
    let field = h.field();
    let p = big_lambda.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::Convention("zero integral".into()))?;
    let inv = big_lambda[p].inv().expect("nonzero");
    let mut alpha = Vec::with_capacity(n);
    for i in 0..n {
        let prod = h.mul(big_lambda, &h.basis_vector(i));
        if prod != crate::linalg::scale(big_lambda, &(&prod[p] * &inv)) {
            return Err(Error::Convention(format!("Λ·e_{i} is not a multiple of Λ")));
        }
        alpha.push(&prod[p] * &inv);
    }
    let i0 = lambda.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::Convention("zero integral".into()))?;
    let inv0 = lambda[i0].inv().expect("nonzero");
    let mut a = vec![field.zero(); n];
    for (k, j, c) in h.comult_basis(i0) {
        a[*k] += &(&(c * &lambda[*j]) * &inv0);
    }
    for k in 0..n {
        let f = h.basis_vector(k);
        if convolve(h, &f, lambda) != crate::linalg::scale(lambda, &a[k]) {
            return Err(Error::Convention(format!("f_{k}∗λ is not f_{k}(a)λ")));
        }
    }
    if !crate::hopf::is_character(h, &alpha) {
        return Err(Error::Convention("modular function is not a character".into()));
    }
    if !crate::hopf::is_grouplike(h, &a) {
        return Err(Error::Convention("distinguished element is not grouplike".into()));
    }
    Ok((alpha, a))
}

/// Character inverse in `G(H*)`: `α⁻¹ = α∘S`.
pub fn character_inverse(h: &HopfAlgebra, chi: &[Scalar]) -> Vec<Scalar> {
    h.antipode().transpose().mul_vec(chi)
}

/// Evaluates both sides of the S⁴ formula on every basis element and
/// returns the mismatches.
pub fn radford_s4_check(h: &HopfAlgebra, a: &[Scalar], alpha: &[Scalar]) -> Vec<S4Witness> {
    let s = h.antipode();
    let s4 = s.mul(s).pow(2);
    let a_inv = h.antipode_of(a);
    let alpha_inv = character_inverse(h, alpha);
    (0..h.dim())
        .filter_map(|i| {
            let x = h.basis_vector(i);
            let lhs = s4.column(i);
            let twisted = hit_left(h, alpha, &hit_right(h, &x, &alpha_inv));
            let rhs = h.mul(&h.mul(a, &twisted), &a_inv);
            (lhs != rhs).then_some(S4Witness { basis_index: i, lhs, rhs })
        })
        .collect()
}

pub fn radford_data(h: &HopfAlgebra) -> Result<RadfordData> {
    let (left_integral, right_integral_dual) = compute_integrals(h)?;
    let (alpha, a) = distinguished_grouplikes(h, &left_integral, &right_integral_dual)?;
    let s4_witnesses = radford_s4_check(h, &a, &alpha);
    Ok(RadfordData { left_integral, right_integral_dual, alpha, a, s4_witnesses })
}

/// `α = ε`.
pub fn unimodular(h: &HopfAlgebra, rad: &RadfordData) -> bool {
    rad.alpha == h.counit()
}

/// `a = 1`.
pub fn dual_unimodular(h: &HopfAlgebra, rad: &RadfordData) -> bool {
    rad.a == h.unit()
}

/// `ε(Λ) ≠ 0`, i.e. `H` is semisimple (Maschke).
pub fn semisimple(h: &HopfAlgebra, rad: &RadfordData) -> bool {
    !pair(h.field(), h.counit(), &rad.left_integral).is_zero() && !is_zero_vec(&rad.left_integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_algebra, sweedler, taft, FiniteGroup};
    use crate::linalg::FieldSpec;

    fn q(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| FieldSpec::Rational.from_i64(x)).collect()
    }

    #[test]
    fn trivial_algebra() {
        let h = group_algebra(&FiniteGroup::cyclic(1), FieldSpec::Rational);
        let rad = radford_data(&h).unwrap();
        assert_eq!(rad.left_integral, q(&[1]));
        assert_eq!(rad.right_integral_dual, q(&[1]));
        assert!(rad.s4_verified());
    }

    #[test]
    fn group_algebra_c2() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rational);
        let rad = radford_data(&h).unwrap();
        assert_eq!(rad.left_integral, q(&[1, 1]));
        assert_eq!(rad.right_integral_dual, q(&[1, 0]));
        assert!(unimodular(&h, &rad) && dual_unimodular(&h, &rad));
        assert!(semisimple(&h, &rad));
    }

    #[test]
    fn sweedler_distinguished_pair() {
        let h = sweedler(FieldSpec::Rational).unwrap();
        let rad = radford_data(&h).unwrap();
        // basis 1, g, x, gx
        assert_eq!(rad.left_integral, q(&[0, 0, 1, 1]));
        assert_eq!(rad.alpha, q(&[1, -1, 0, 0]));
        assert_eq!(rad.a, q(&[0, 1, 0, 0]));
        assert!(!unimodular(&h, &rad));
        assert!(!semisimple(&h, &rad));
        assert!(rad.s4_verified());
    }

    #[test]
    fn taft_nine_s4_is_not_identity_but_formula_holds() {
        let h = taft(3, 7, 2).unwrap();
        let s = h.antipode();
        let s4 = s.mul(s).pow(2);
        assert!(!s4.is_identity());
        let rad = radford_data(&h).unwrap();
        assert!(rad.s4_verified(), "{:?}", rad.s4_witnesses);
    }

    #[test]
    fn broken_pair_is_reported() {
        let h = taft(3, 7, 2).unwrap();
        let rad = radford_data(&h).unwrap();
        let a_inv = h.antipode_of(&rad.a);
        assert!(!radford_s4_check(&h, &a_inv, &rad.alpha).is_empty());
    }
}
