//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's elimination or eigenvalue code.
#![allow(dead_code)]

use hopfdouble::catalog::FiniteGroup;
use hopfdouble::double::QuasiTriangular;
use hopfdouble::hopf::{HopfAlgebra, Tensor};
use hopfdouble::linalg::{FieldSpec, Matrix, Scalar};

/// Plain Gauss-Jordan elimination; returns the reduced rows and pivot columns.
pub fn rref(mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn naive_rank(m: &Matrix) -> usize {
    rref(m.to_rows()).1.len()
}

pub fn naive_kernel(field: FieldSpec, rows: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return (0..cols).map(|i| unit_vec(field, cols, i)).collect();
    }
    let (r, pivots) = rref(rows);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        out.push(v);
    }
    out
}

pub fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Every vector of `F_p^n`, in lexicographic order.
pub fn all_vectors(field: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    let elems: Vec<Scalar> = field.elements().expect("finite field").collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Scalar>| {
                elems.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// Grouplikes by exhaustive search over `F_p^n`.
pub fn brute_force_grouplikes(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    all_vectors(h.field(), h.dim())
        .into_iter()
        .filter(|x| h.counit_of(x).is_one() && h.comult_of(x) == Tensor::pure(h.field(), [x.as_slice(), x.as_slice()]))
        .collect()
}

/// Algebra characters by exhaustive search over `F_p^n`.
pub fn brute_force_characters(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let n = h.dim();
    all_vectors(h.field(), n)
        .into_iter()
        .filter(|chi| {
            let at = |v: &[Scalar]| v.iter().zip(chi).fold(h.field().zero(), |acc, (a, b)| &acc + &(a * b));
            at(h.unit()).is_one()
                && (0..n).all(|i| {
                    (0..n).all(|j| {
                        let prod = h.mul(&h.basis_vector(i), &h.basis_vector(j));
                        at(&prod) == &chi[i] * &chi[j]
                    })
                })
        })
        .collect()
}

/// Ribbon count predicted for `kG` over `Q`: central involutions (with 1)
/// times sign characters.
pub fn group_ribbon_formula(g: &FiniteGroup) -> usize {
    let n = g.order();
    let central_square_roots = (0..n)
        .filter(|&l| (0..n).all(|x| g.table[l][x] == g.table[x][l]) && g.table[l][l] == 0)
        .count();
    // Hom(G, Q^x) lands in {±1}: enumerate sign patterns
    let homs = (0u32..1 << n)
        .filter(|mask| {
            let sign = |x: usize| mask >> x & 1;
            sign(0) == 0 && (0..n).all(|a| (0..n).all(|b| sign(g.table[a][b]) == sign(a) ^ sign(b)))
        })
        .count();
    central_square_roots * homs
}

/// A Hopf isomorphism `h → k` given by images of algebra generators, found
/// by exhaustive search over the candidate pools and fully verified.
/// `words[i]` lists the generators whose product is the basis element `i`.
pub fn find_hopf_isomorphism(
    h: &HopfAlgebra,
    k: &HopfAlgebra,
    words: &[Vec<usize>],
    pools: &[Vec<Vec<Scalar>>],
) -> Option<Matrix> {
    let mut choice = vec![0usize; pools.len()];
    loop {
        let images: Vec<Vec<Scalar>> = words
            .iter()
            .map(|w| w.iter().fold(k.unit().to_vec(), |acc, &g| k.mul(&acc, &pools[g][choice[g]])))
            .collect();
        let phi = Matrix::from_columns(k.field(), k.dim(), &images);
        if is_hopf_isomorphism(h, k, &phi) {
            return Some(phi);
        }
        let mut slot = 0;
        loop {
            if slot == pools.len() {
                return None;
            }
            choice[slot] += 1;
            if choice[slot] < pools[slot].len() {
                break;
            }
            choice[slot] = 0;
            slot += 1;
        }
    }
}

pub fn is_hopf_isomorphism(h: &HopfAlgebra, k: &HopfAlgebra, phi: &Matrix) -> bool {
    let n = h.dim();
    if k.dim() != n || naive_rank(phi) != n {
        return false;
    }
    let img = |x: &[Scalar]| phi.mul_vec(x);
    if img(h.unit()) != k.unit() {
        return false;
    }
    for i in 0..n {
        let ei = h.basis_vector(i);
        if k.counit_of(&img(&ei)) != h.counit()[i] {
            return false;
        }
        if img(&h.antipode_of(&ei)) != k.antipode_of(&img(&ei)) {
            return false;
        }
        let mut pushed = Tensor::zero(h.field());
        for ([a, b], c) in h.comult_of(&ei).terms() {
            let t = Tensor::pure(h.field(), [&phi.column(*a), &phi.column(*b)]).scale(c);
            pushed = pushed.add(&t);
        }
        if pushed != k.comult_of(&img(&ei)) {
            return false;
        }
        for j in 0..n {
            let ej = h.basis_vector(j);
            if img(&h.mul(&ei, &ej)) != k.mul(&img(&ei), &img(&ej)) {
                return false;
            }
        }
    }
    true
}

/// Vectors with entries in `range` (as integers).
pub fn small_vectors(field: FieldSpec, n: usize, range: std::ops::RangeInclusive<i64>) -> Vec<Vec<Scalar>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Scalar>| {
                range.clone().map(move |e| {
                    let mut w = v.clone();
                    w.push(field.from_i64(e));
                    w
                })
            })
            .collect();
    }
    out
}

/// Ribbon elements of a double over `F_p`, by exhaustive search over the
/// affine space of central `v` with `S(v) = v` and `ε(v) = 1`.
pub fn brute_force_ribbon_count(qt: &QuasiTriangular, limit: usize) -> Option<usize> {
    let a = &qt.algebra;
    let n = a.dim();
    let field = a.field();
    // unknown v ∈ F^n: rows for e_i v - v e_i = 0 and S(v) - v = 0
    let mut rows = Vec::new();
    for i in 0..n {
        let mut m = vec![vec![field.zero(); n]; n];
        for t in 0..n {
            let d = a.mul(&a.basis_vector(i), &a.basis_vector(t));
            let e = a.mul(&a.basis_vector(t), &a.basis_vector(i));
            for k in 0..n {
                m[k][t] = &d[k] - &e[k];
            }
        }
        rows.extend(m.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    let s = a.antipode();
    for k in 0..n {
        let mut r: Vec<Scalar> = s.row(k).to_vec();
        r[k] -= &field.one();
        rows.push(r);
    }
    let hom = naive_kernel(field, rows, n);
    // particular solution of ε(v) = 1 inside the homogeneous space
    let eps: Vec<Scalar> = hom.iter().map(|b| a.counit_of(b)).collect();
    let j = eps.iter().position(|c| !c.is_zero())?;
    let inv = eps[j].inv().unwrap();
    let particular: Vec<Scalar> = hom[j].iter().map(|x| x * &inv).collect();
    let directions: Vec<Vec<Scalar>> = hom
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != j)
        .map(|(i, b)| {
            let f = &eps[i] * &inv;
            b.iter().zip(&hom[j]).map(|(x, y)| x - &(&f * y)).collect()
        })
        .collect();
    let p = field.characteristic() as usize;
    if p.checked_pow(directions.len() as u32)? > limit {
        return None;
    }
    let target = a.mul(&qt.u, &a.antipode_of(&qt.u));
    let mut count = 0;
    for coeffs in all_vectors(field, directions.len()) {
        let mut v = particular.clone();
        for (c, d) in coeffs.iter().zip(&directions) {
            for (x, y) in v.iter_mut().zip(d) {
                *x += &(c * y);
            }
        }
        if a.mul(&v, &v) != target {
            continue;
        }
        if qt.monodromy.mul(a, &a.comult_of(&v)) == Tensor::pure(field, [v.as_slice(), v.as_slice()]) {
            count += 1;
        }
    }
    Some(count)
}
