//! Dense exact linear algebra over the rationals.
//!
//! Sizes here are desk scale (dimensions in the tens), so plain Gaussian
//! elimination with exact arithmetic is the right tool. Reduced row echelon
//! form is the canonical representative used for subspace equality
//! throughout the crate.

use num_traits::{One, Zero};

use crate::scalar::Rat;

pub fn vzero(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vis_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub fn vadd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(c: &Rat, v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`, skipping zero work.
pub fn vaxpy(acc: &mut [Rat], c: &Rat, v: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// A dense rows × cols matrix of exact rationals.
///
/// A matrix with `rows = m`, `cols = n` represents a linear map from
/// n-dimensional coordinate columns to m-dimensional ones via [`Mat::apply`].
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(crate::scalar::format_rat).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vzero(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// A matrix with zero rows but a definite column count.
    pub fn empty(cols: usize) -> Self {
        Mat { rows: 0, cols, data: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn set_column(&mut self, j: usize, col: &[Rat]) {
        assert_eq!(col.len(), self.rows, "set_column: length mismatch");
        for (i, v) in col.iter().enumerate() {
            self.set(i, j, v.clone());
        }
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        vis_zero(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.rows)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        let mut out = vzero(self.rows);
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for (a, x) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    acc += a * x;
                }
            }
            *slot = acc;
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Reduced row echelon form. Returns the echelon matrix with zero rows
    /// dropped, together with the pivot column of each remaining row.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            // first nonzero entry at or below row r
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = {
                let lead = m.get(r, col).clone();
                Rat::one() / lead
            };
            for j in col..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, col).is_zero() {
                    let c = m.get(i, col).clone();
                    for j in col..m.cols {
                        let v = m.get(i, j) - &c * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        let rows: Vec<Vec<Rat>> = (0..r).map(|i| m.row(i).to_vec()).collect();
        let mut out = Mat::from_rows(rows);
        out.cols = m.cols; // preserve column count even when r == 0
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column, in
    /// ascending free-column order.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (e, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vzero(self.cols);
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -e.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self · x = b`, if any.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "solve: rhs length mismatch");
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for (i, rhs) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs.clone());
        }
        let (e, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vzero(self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = e.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Mat::empty(0));
        }
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let (e, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, e.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}
