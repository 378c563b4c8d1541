//! Dense exact matrices, row echelon forms and subspaces.
//!
//! Over the rationals elimination is fraction-free (Bareiss) on integer
//! rows; over prime fields it runs on raw residues.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, s) in col.iter().enumerate() {
                m[(i, j)] = s.clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| if r == c { self[(r, c)].is_one() } else { self[(r, c)].is_zero() })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimensions");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self - s·I`.
    pub fn shift(&self, s: &Scalar) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] -= s;
        }
        m
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `(a⊗b)[i·rows_b + k, j·cols_b + l] = a[i,j]·b[k,l]`.
    pub fn kronecker(&self, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * b.rows, self.cols * b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        out[(i * b.rows + k, j * b.cols + l)] = a * &b[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn echelon(&self) -> Echelon {
        echelon_rows(self.field, self.to_rows(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right null space. Vector `t` has a `1` in the `t`-th
    /// free column and `0` in every other free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let ech = self.echelon();
        ech.kernel_basis(self.field, self.cols)
    }

    /// A solution of `self·x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let rows = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let ech = echelon_rows(self.field, rows, self.cols + 1);
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        Ok(Some(ech.back_substitute(self.field, self.cols, &[], true)))
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("inverse of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let rows = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { self.field.one() } else { self.field.zero() }));
                row
            })
            .collect();
        let ech = echelon_rows(self.field, rows, 2 * n);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for c in 0..n {
            let col = ech.solve_column(self.field, n, n + c);
            for (r, s) in col.into_iter().enumerate() {
                inv[(r, c)] = s;
            }
        }
        Ok(Some(inv))
    }
}

/// A row echelon form: `rows[r]` has its leading nonzero entry at
/// `pivots[r]`, strictly increasing in `r`. Only the nonzero rows are kept.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    /// Solves the pivot variables given assignments for some free columns
    /// (others zero). With `augmented`, the last entry of each row is the
    /// right-hand side.
    fn back_substitute(&self, field: FieldSpec, cols: usize, free: &[(usize, Scalar)], augmented: bool) -> Vec<Scalar> {
        let mut x = vec![field.zero(); cols];
        for (c, v) in free {
            x[*c] = v.clone();
        }
        for (row, &pc) in self.rows.iter().zip(&self.pivots).rev() {
            let mut s = if augmented { row[cols].clone() } else { field.zero() };
            for j in pc + 1..cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    s -= &(&row[j] * &x[j]);
                }
            }
            x[pc] = &s * &row[pc].inv().expect("pivot is nonzero");
        }
        x
    }

    fn solve_column(&self, field: FieldSpec, cols: usize, rhs: usize) -> Vec<Scalar> {
        let mut x = vec![field.zero(); cols];
        for (row, &pc) in self.rows.iter().zip(&self.pivots).rev() {
            if pc >= cols {
                continue;
            }
            let mut s = row[rhs].clone();
            for j in pc + 1..cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    s -= &(&row[j] * &x[j]);
                }
            }
            x[pc] = &s * &row[pc].inv().expect("pivot is nonzero");
        }
        x
    }

    pub fn kernel_basis(&self, field: FieldSpec, cols: usize) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|c| self.back_substitute(field, cols, &[(c, field.one())], false))
            .collect()
    }
}

fn echelon_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>, cols: usize) -> Echelon {
    match field {
        FieldSpec::Rational => bareiss(rows, cols),
        FieldSpec::Prime { p } => gauss_mod_p(rows, cols, p),
    }
}

/// Fraction-free elimination. Each row is first scaled to integers; every
/// entry produced afterwards is a minor of the scaled matrix, so the
/// divisions by the previous pivot are exact.
fn bareiss(rows: Vec<Vec<Scalar>>, cols: usize) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, s| {
                acc.lcm(s.as_rational().expect("rational entry").denom())
            });
            row.iter()
                .map(|s| {
                    let q = s.as_rational().unwrap();
                    q.numer() * (&lcm / q.denom())
                })
                .collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !x.is_zero()))
        .collect();
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            if lead.is_zero() {
                for x in row[c + 1..].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &pivot_row[c] / &prev;
                    }
                }
                continue;
            }
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    let rows = a
        .into_iter()
        .map(|row| row.into_iter().map(|x| Scalar::Rational(BigRational::from_integer(x))).collect())
        .collect();
    Echelon { rows, pivots }
}

fn gauss_mod_p(rows: Vec<Vec<Scalar>>, cols: usize, p: u32) -> Echelon {
    let pm = p as u64;
    let mut a: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|row| row.iter().map(|s| s.residue().expect("residue entry") as u64).collect())
        .filter(|row: &Vec<u64>| row.iter().any(|&x| x != 0))
        .collect();
    let m = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= m {
            break;
        }
        let Some(pr) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = super::scalar::pow_mod(a[r][c], pm - 2, pm);
        for x in a[r][c..].iter_mut() {
            *x = *x * inv % pm;
        }
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                row[j] = (row[j] + (pm - f) * pivot_row[j]) % pm;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    let rows = a
        .into_iter()
        .map(|row| row.into_iter().map(|x| Scalar::Residue { value: x as u32, modulus: p }).collect())
        .collect();
    Echelon { rows, pivots }
}

/// A subspace of `field^ambient` with a basis in reduced form: the basis
/// vector `t` is `1` at `coord_rows[t]` and `0` at every other coordinate row,
/// so coordinates of a member are read off directly.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    coord_rows: Vec<usize>,
}

impl Subspace {
    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Subspace { field, ambient, basis, coord_rows: (0..ambient).collect() }
    }

    /// Null space of `m`.
    pub fn kernel_of(m: &Matrix) -> Self {
        let ech = m.echelon();
        let mut is_pivot = vec![false; m.cols()];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis: ech.kernel_basis(m.field(), m.cols()),
            coord_rows: (0..m.cols()).filter(|&c| !is_pivot[c]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<Scalar>> {
        self.basis
    }

    /// Coordinates of `v` in the basis, assuming `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.coord_rows.iter().map(|&r| v[r].clone()).collect()
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.combine(&self.coords(v)).as_slice() == v
    }

    /// Intersects with the hyperplane `{x : row·x = 0}`.
    pub fn restrict_by_row(&mut self, row: &[(usize, Scalar)]) {
        let values: Vec<Scalar> = self
            .basis
            .iter()
            .map(|b| {
                let mut acc = self.field.zero();
                for (i, c) in row {
                    if !b[*i].is_zero() {
                        acc += &(c * &b[*i]);
                    }
                }
                acc
            })
            .collect();
        let Some(t0) = values.iter().position(|v| !v.is_zero()) else {
            return;
        };
        let lead = self.basis.swap_remove(t0);
        let lead_value = values[t0].inv().expect("nonzero");
        self.coord_rows.swap_remove(t0);
        let mut values = values;
        values.swap_remove(t0);
        for (b, v) in self.basis.iter_mut().zip(&values) {
            if v.is_zero() {
                continue;
            }
            let f = v * &lead_value;
            for (x, l) in b.iter_mut().zip(&lead) {
                if !l.is_zero() {
                    *x -= &(&f * l);
                }
            }
        }
    }

    /// Intersects with the null space of `constraints` (rows are linear forms
    /// on the ambient space).
    pub fn restrict(&mut self, constraints: &Matrix) {
        assert_eq!(constraints.cols(), self.ambient);
        if self.basis.is_empty() || constraints.rows() == 0 {
            return;
        }
        let k = self.basis.len();
        let mut reduced = Matrix::zeros(self.field, constraints.rows(), k);
        for r in 0..constraints.rows() {
            let row = constraints.row(r);
            for (t, b) in self.basis.iter().enumerate() {
                let mut acc = self.field.zero();
                for (c, x) in row.iter().zip(b) {
                    if !c.is_zero() && !x.is_zero() {
                        acc += &(c * x);
                    }
                }
                reduced[(r, t)] = acc;
            }
        }
        self.restrict_in_coords(&reduced);
    }

    /// Intersects with `{Σ y_t b_t : m·y = 0}` where `m` acts on basis coordinates.
    pub fn restrict_in_coords(&mut self, m: &Matrix) {
        assert_eq!(m.cols(), self.dim());
        let inner = Subspace::kernel_of(m);
        if inner.dim() == self.dim() {
            return;
        }
        let basis = inner.basis.iter().map(|y| self.combine(y)).collect();
        let coord_rows = inner.coord_rows.iter().map(|&t| self.coord_rows[t]).collect();
        self.basis = basis;
        self.coord_rows = coord_rows;
    }
}
