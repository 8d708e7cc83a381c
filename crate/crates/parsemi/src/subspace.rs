//! Canonically represented subspaces of Q^n.
//!
//! A subspace stores its basis in reduced row echelon form, so equal
//! subspaces compare equal structurally and all lattice operations
//! (sum, intersection, inclusion) are decidable by exact arithmetic.

use num_traits::Zero;

use crate::linalg::{vis_zero, vzero, Mat};
use crate::scalar::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Reduced-echelon rows; pivot columns strictly increase.
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "span: vector length mismatch");
        }
        let mut m = Mat::from_rows(vectors.to_vec());
        if vectors.is_empty() {
            m = Mat::empty(ambient);
        }
        let (e, pivots) = m.rref();
        Subspace { ambient, basis: e.rows_iter().map(|r| r.to_vec()).collect(), pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let id = Mat::identity(ambient);
        Subspace {
            ambient,
            basis: id.rows_iter().map(|r| r.to_vec()).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates not used as pivots, in ascending order. These are
    /// the canonical coset representatives modulo this subspace.
    pub fn complement_columns(&self) -> Vec<usize> {
        let pivot_set: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        (0..self.ambient).filter(|c| !pivot_set.contains(c)).collect()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    ///
    /// Because pivot columns are cleared, the candidate coordinates are just
    /// the pivot entries of `v`; one exact comparison settles membership.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "coords_of: length mismatch");
        let coords: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vzero(self.ambient);
        for (c, row) in coords.iter().zip(&self.basis) {
            crate::linalg::vaxpy(&mut rebuilt, c, row);
        }
        if rebuilt == v { Some(coords) } else { None }
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vec(v))
    }

    /// Ambient vector with the given echelon-basis coordinates.
    pub fn from_coords(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim(), "from_coords: length mismatch");
        let mut v = vzero(self.ambient);
        for (c, row) in coords.iter().zip(&self.basis) {
            crate::linalg::vaxpy(&mut v, c, row);
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "sum: ambient mismatch");
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &rows)
    }

    /// Intersection via the kernel of the stacked-basis system: a vector is
    /// in both row spaces iff it is `a·U = b·W` for a kernel element `(a, b)`
    /// of `[Uᵀ | -Wᵀ]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "intersect: ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let du = self.dim();
        let dw = other.dim();
        let mut m = Mat::zeros(self.ambient, du + dw);
        for (j, row) in self.basis.iter().enumerate() {
            m.set_column(j, row);
        }
        for (j, row) in other.basis.iter().enumerate() {
            let negated: Vec<Rat> = row.iter().map(|x| -x.clone()).collect();
            m.set_column(du + j, &negated);
        }
        let mut vectors = Vec::new();
        for k in m.nullspace() {
            let mut v = vzero(self.ambient);
            for (j, row) in self.basis.iter().enumerate() {
                crate::linalg::vaxpy(&mut v, &k[j], row);
            }
            if !vis_zero(&v) {
                vectors.push(v);
            }
        }
        Subspace::span(self.ambient, &vectors)
    }

    /// Image of this subspace under a linear map given on ambient coordinates.
    pub fn image_under(&self, map: impl Fn(&[Rat]) -> Vec<Rat>, target_ambient: usize) -> Subspace {
        let vectors: Vec<Vec<Rat>> = self.basis.iter().map(|v| map(v)).collect();
        Subspace::span(target_ambient, &vectors)
    }
}

/// Zero test helper reused by callers dealing in raw vectors.
pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}
