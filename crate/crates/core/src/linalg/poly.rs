//! Univariate polynomials, characteristic polynomials and root search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Self {
        Poly::new(field, vec![c])
    }

    /// `x - r`
    pub fn linear(field: FieldSpec, r: &Scalar) -> Self {
        Poly::new(field, vec![-r, field.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let out = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, out)
    }

    pub fn derivative(&self) -> Poly {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| &self.field.from_i64(i as i64) * c)
            .collect();
        Poly::new(self.field, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.coeffs[d].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::new(self.field, vec![]), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().unwrap();
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Characteristic polynomial `det(x·I - m)` by reduction to Hessenberg
/// form, valid over any field.
pub fn charpoly(m: &Matrix) -> Poly {
    assert_eq!(m.rows(), m.cols(), "charpoly of a non-square matrix");
    let field = m.field();
    let n = m.rows();
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let target = col + 1;
        let Some(i) = (target..n).find(|&i| !h[(i, col)].is_zero()) else {
            continue;
        };
        if i != target {
            for c in 0..n {
                let tmp = h[(i, c)].clone();
                h[(i, c)] = h[(target, c)].clone();
                h[(target, c)] = tmp;
            }
            for r in 0..n {
                let tmp = h[(r, i)].clone();
                h[(r, i)] = h[(r, target)].clone();
                h[(r, target)] = tmp;
            }
        }
        let t_inv = h[(target, col)].inv().unwrap();
        for i in target + 1..n {
            let u = &h[(i, col)] * &t_inv;
            if u.is_zero() {
                continue;
            }
            for c in 0..n {
                let d = &u * &h[(target, c)];
                h[(i, c)] -= &d;
            }
            for r in 0..n {
                let d = &u * &h[(r, i)];
                h[(r, target)] += &d;
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut ps: Vec<Poly> = vec![Poly::constant(field, field.one())];
    for k in 0..n {
        let mut next = Poly::linear(field, &h[(k, k)]).mul(&ps[k]);
        let mut t = field.one();
        for i in (0..k).rev() {
            t = &t * &h[(i + 1, i)];
            if t.is_zero() {
                break;
            }
            let c = &t * &h[(i, k)];
            if !c.is_zero() {
                next = next.sub(&Poly::constant(field, c).mul(&ps[i]));
            }
        }
        ps.push(next);
    }
    ps.pop().unwrap()
}

/// Distinct roots in the base field (ascending) and the degree of the
/// cofactor that has no roots in the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSplit {
    pub roots: Vec<Scalar>,
    pub residual_degree: usize,
}

pub fn roots_in_field(p: &Poly) -> RootSplit {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let candidates = match p.field {
        FieldSpec::Prime { .. } => p.field.elements().unwrap().filter(|x| p.eval(x).is_zero()).collect(),
        FieldSpec::Rational => rational_roots(p),
    };
    let mut residual = p.clone();
    let mut roots = Vec::new();
    for r in candidates {
        let lin = Poly::linear(p.field, &r);
        let mut hit = false;
        loop {
            let (q, rem) = residual.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            residual = q;
            hit = true;
        }
        if hit {
            roots.push(r);
        }
    }
    roots.sort();
    RootSplit { roots, residual_degree: residual.degree().unwrap_or(0) }
}

/// Rational roots via the square-free part and the rational root theorem.
fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let field = p.field;
    let sf = if p.degree().unwrap_or(0) > 0 {
        p.div_rem(&p.gcd(&p.derivative())).0
    } else {
        p.clone()
    };
    let mut ints = primitive_integer_coeffs(&sf);
    let mut roots = Vec::new();
    let mut lowest = 0;
    while lowest < ints.len() && ints[lowest].is_zero() {
        lowest += 1;
    }
    if lowest > 0 {
        roots.push(field.zero());
        ints.drain(..lowest);
    }
    if ints.len() <= 1 {
        return roots;
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let nums = divisors(&a0);
    let dens = divisors(&an);
    let mut seen = std::collections::BTreeSet::new();
    for n in &nums {
        for d in &dens {
            for sign in [1, -1] {
                let q = BigRational::new(n * BigInt::from(sign), d.clone());
                if seen.insert(q.clone()) {
                    let s = Scalar::Rational(q);
                    if sf.eval(&s).is_zero() {
                        roots.push(s);
                    }
                }
            }
        }
    }
    roots
}

fn primitive_integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.as_rational().expect("rational").denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| {
            let q = c.as_rational().unwrap();
            q.numer() * (&lcm / q.denom())
        })
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Positive divisors by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if rest > BigInt::one() {
        primes.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (prime, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for x in &out {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pw);
                pw *= &prime;
            }
        }
        out = next;
    }
    out.sort();
    out
}
