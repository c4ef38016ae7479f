//! Dense matrices over `F_p` and exact Gaussian elimination.

use super::field::{PrimeField, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(cols: &[Vec<Scalar>], rows: usize) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: &PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = f.characteristic() as u64;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (s, &b) in acc.iter_mut().zip(brow) {
                    *s = (*s + a * b as u64) % p;
                }
            }
            for (o, s) in orow.iter_mut().zip(acc) {
                *o = s as Scalar;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar], f: &PrimeField) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
    }

    pub fn add(&self, other: &Matrix, f: &PrimeField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix, f: &PrimeField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: Scalar, f: &PrimeField) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// `self += c * other`
    pub fn add_scaled_in_place(&mut self, other: &Matrix, c: Scalar, f: &PrimeField) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, c));
        }
    }

    /// Flattened entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Pivots are chosen as the first nonzero entry scanning columns left to
    /// right and rows top to bottom.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = f.neg(self[(i, c)]);
                    self.row_axpy(i, r, factor, c, f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[dst] += c * row[src], starting at column `from`.
    fn row_axpy(&mut self, dst: usize, src: usize, c: Scalar, from: usize, f: &PrimeField) {
        let p = f.characteristic() as u64;
        for j in from..self.cols {
            let s = self.data[src * self.cols + j];
            if s != 0 {
                let d = &mut self.data[dst * self.cols + j];
                *d = ((*d as u64 + c as u64 * s as u64) % p) as Scalar;
            }
        }
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{ v : self * v = 0 }`, one vector per free column, in
    /// increasing order of free column index.
    pub fn nullspace(&self, f: &PrimeField) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[(r, free)]);
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self, f: &PrimeField) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let piv = aug.rref(f);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent,
    Solutions { particular: Vec<Scalar>, nullspace: Vec<Vec<Scalar>> },
}

/// Solves `matrix * x = rhs` exactly.
pub fn solve_linear(matrix: &Matrix, rhs: &[Scalar], f: &PrimeField) -> Result<LinearSolution> {
    if rhs.len() != matrix.rows() {
        return Err(Error::input(
            "dimension_mismatch",
            format!("matrix has {} rows but rhs has {}", matrix.rows(), rhs.len()),
        ));
    }
    let n = matrix.cols();
    let mut aug = Matrix::zeros(matrix.rows(), n + 1);
    for i in 0..matrix.rows() {
        for j in 0..n {
            aug[(i, j)] = matrix[(i, j)];
        }
        aug[(i, n)] = rhs[i];
    }
    let pivots = aug.rref(f);
    if pivots.last() == Some(&n) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = vec![0; n];
    for (r, &pc) in pivots.iter().enumerate() {
        particular[pc] = aug[(r, n)];
    }
    Ok(LinearSolution::Solutions { particular, nullspace: matrix.nullspace(f) })
}

/// Incrementally maintained row-echelon basis of a subspace of `F_p^n`,
/// used for span-membership tests.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    dim: usize,
    // (pivot column, normalized row)
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonSpan {
    pub fn new(dim: usize) -> Self {
        EchelonSpan { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the current basis.
    pub fn reduce(&self, v: &mut [Scalar], f: &PrimeField) {
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(neg, r));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar], f: &PrimeField) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns true iff it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar], f: &PrimeField) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // keep existing rows reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &r) in row.iter_mut().zip(&w) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(neg, r));
                    }
                }
            }
        }
        self.rows.push((pc, w));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r)
    }
}
