//! Finite-dimensional algebras over the rationals given by structure
//! constants.
//!
//! Carriers may be non-unital and non-associative; associativity is a
//! tri-state certificate rather than an assumption, because the formal-sum
//! algebras built downstream are exactly the objects whose associativity is
//! in question. Operations that genuinely need associativity demand the
//! certificate and fail loudly otherwise.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{vaxpy, vzero, Mat};
use crate::scalar::Rat;
use crate::subspace::Subspace;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("supplied unit fails on basis element {witness}")]
    NotUnit { witness: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("not a two-sided ideal: {witness}")]
    NotAnIdeal { witness: String },
    #[error("subspace not multiplicatively closed: {witness}")]
    NotClosed { witness: String },
    #[error("algebra is not associative")]
    NotAssociative,
}

/// Associativity certificate for a structure-constant algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssocStatus {
    Unchecked,
    Verified,
    /// A basis triple where the two parenthesizations differ.
    Refuted(usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    dim: usize,
    /// Entry `i * dim + j` is the coordinate vector of `e_i · e_j`.
    constants: Vec<Vec<Rat>>,
    unit: Option<Vec<Rat>>,
    assoc: AssocStatus,
}

impl StructureAlgebra {
    /// Builds an algebra from raw structure constants, verifying the unit if
    /// one is supplied. The associativity status starts out `Unchecked`.
    pub fn from_constants(
        dim: usize,
        constants: Vec<Vec<Rat>>,
        unit: Option<Vec<Rat>>,
    ) -> Result<Self, AlgebraError> {
        if constants.len() != dim * dim {
            return Err(AlgebraError::BadShape(format!(
                "expected {} product vectors, got {}",
                dim * dim,
                constants.len()
            )));
        }
        for (k, v) in constants.iter().enumerate() {
            if v.len() != dim {
                return Err(AlgebraError::BadShape(format!(
                    "product vector {} has length {}, expected {}",
                    k,
                    v.len(),
                    dim
                )));
            }
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(AlgebraError::BadShape("unit length mismatch".into()));
            }
        }
        let alg = StructureAlgebra { dim, constants, unit: None, assoc: AssocStatus::Unchecked };
        if let Some(u) = unit {
            for i in 0..dim {
                let mut e = vzero(dim);
                e[i] = Rat::one();
                if alg.mul(&u, &e) != e || alg.mul(&e, &u) != e {
                    return Err(AlgebraError::NotUnit { witness: i });
                }
            }
            return Ok(StructureAlgebra { unit: Some(u), ..alg });
        }
        Ok(alg)
    }

    /// The ground field viewed as a one-dimensional algebra.
    pub fn field() -> Self {
        Self::from_constants(1, vec![vec![Rat::one()]], Some(vec![Rat::one()]))
            .unwrap()
            .with_assoc_checked()
    }

    /// Direct product of `k` copies of the field (componentwise product).
    pub fn product_of_fields(k: usize) -> Self {
        let mut constants = vec![vzero(k); k * k];
        for i in 0..k {
            constants[i * k + i][i] = Rat::one();
        }
        Self::from_constants(k, constants, Some(vec![Rat::one(); k]))
            .unwrap()
            .with_assoc_checked()
    }

    /// The field adjoined one nilpotent: basis `{1, x}` with `x² = 0`.
    pub fn dual_numbers() -> Self {
        let mut constants = vec![vzero(2); 4];
        constants[0] = vec![Rat::one(), Rat::zero()]; // 1·1
        constants[1] = vec![Rat::zero(), Rat::one()]; // 1·x
        constants[2] = vec![Rat::zero(), Rat::one()]; // x·1
        // x·x = 0
        Self::from_constants(2, constants, Some(vec![Rat::one(), Rat::zero()]))
            .unwrap()
            .with_assoc_checked()
    }

    /// Full `n × n` matrix algebra on the matrix-unit basis `E_{rc}`,
    /// indexed by `r * n + c`.
    pub fn matrix_algebra(n: usize) -> Self {
        let dim = n * n;
        let mut constants = vec![vzero(dim); dim * dim];
        for r in 0..n {
            for c in 0..n {
                for r2 in 0..n {
                    for c2 in 0..n {
                        if c == r2 {
                            // E_rc · E_cc2 = E_rc2
                            constants[(r * n + c) * dim + (r2 * n + c2)][r * n + c2] = Rat::one();
                        }
                    }
                }
            }
        }
        let mut unit = vzero(dim);
        for r in 0..n {
            unit[r * n + r] = Rat::one();
        }
        Self::from_constants(dim, constants, Some(unit)).unwrap().with_assoc_checked()
    }

    /// All products zero. Not unital for `dim > 0`.
    pub fn zero_product(dim: usize) -> Self {
        Self::from_constants(dim, vec![vzero(dim); dim * dim], None)
            .unwrap()
            .with_assoc_checked()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&Vec<Rat>> {
        self.unit.as_ref()
    }

    pub fn assoc_status(&self) -> AssocStatus {
        self.assoc
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Rat] {
        &self.constants[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut e = vzero(self.dim);
        e[i] = Rat::one();
        e
    }

    /// Bilinear extension of the structure constants.
    pub fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim, "mul: left length mismatch");
        assert_eq!(y.len(), self.dim, "mul: right length mismatch");
        let mut out = vzero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                vaxpy(&mut out, &c, self.basis_product(i, j));
            }
        }
        out
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..self.dim {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), self.basis_product(j, k));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Returns the same algebra with the associativity certificate filled in.
    pub fn with_assoc_checked(mut self) -> Self {
        self.assoc = match self.associativity_witness() {
            None => AssocStatus::Verified,
            Some((i, j, k)) => AssocStatus::Refuted(i, j, k),
        };
        self
    }

    /// Attaches a verified unit to an existing algebra.
    pub fn with_unit(self, unit: Vec<Rat>) -> Result<Self, AlgebraError> {
        Self::from_constants(self.dim, self.constants, Some(unit)).map(|a| StructureAlgebra {
            assoc: self.assoc,
            ..a
        })
    }

    pub fn is_associative(&self) -> bool {
        match self.assoc {
            AssocStatus::Verified => true,
            AssocStatus::Refuted(..) => false,
            AssocStatus::Unchecked => self.associativity_witness().is_none(),
        }
    }

    pub fn require_associative(&self) -> Result<(), AlgebraError> {
        if self.is_associative() { Ok(()) } else { Err(AlgebraError::NotAssociative) }
    }

    /// Matrix of left multiplication by `x` on the whole algebra.
    pub fn left_mult_matrix(&self, x: &[Rat]) -> Mat {
        let cols: Vec<Vec<Rat>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        columns_to_mat(self.dim, cols)
    }

    /// Matrix of right multiplication by `x` on the whole algebra.
    pub fn right_mult_matrix(&self, x: &[Rat]) -> Mat {
        let cols: Vec<Vec<Rat>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        columns_to_mat(self.dim, cols)
    }

    /// Witness that `x` is not a two-sided ideal, if any.
    pub fn ideal_witness(&self, x: &Subspace) -> Option<String> {
        assert_eq!(x.ambient_dim(), self.dim);
        for (vi, v) in x.basis().iter().enumerate() {
            for i in 0..self.dim {
                if !x.contains_vec(&self.mul(&self.basis_vector(i), v)) {
                    return Some(format!("e_{} · b_{} escapes the subspace", i, vi));
                }
                if !x.contains_vec(&self.mul(v, &self.basis_vector(i))) {
                    return Some(format!("b_{} · e_{} escapes the subspace", vi, i));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, x: &Subspace) -> bool {
        self.ideal_witness(x).is_none()
    }

    /// Smallest subspace containing the generators and closed under left and
    /// right multiplication by every basis element, by fixpoint iteration.
    /// Valid without associativity: each round multiplies every current
    /// basis vector on both sides until the dimension stabilizes.
    pub fn ideal_closure(&self, generators: &[Vec<Rat>]) -> Subspace {
        for g in generators {
            assert_eq!(g.len(), self.dim, "ideal_closure: generator length mismatch");
        }
        let mut span = Subspace::span(self.dim, generators);
        loop {
            let mut products = Vec::new();
            for v in span.basis() {
                for i in 0..self.dim {
                    let e = self.basis_vector(i);
                    products.push(self.mul(&e, v));
                    products.push(self.mul(v, &e));
                }
            }
            let next = span.sum(&Subspace::span(self.dim, &products));
            if next.dim() == span.dim() {
                return next;
            }
            span = next;
        }
    }

    /// Smallest multiplicatively closed subspace containing the generators,
    /// with its induced structure constants. The subspace doubles as the
    /// inclusion: its echelon basis converts between coordinates.
    pub fn subalgebra_generated(
        &self,
        generators: &[Vec<Rat>],
    ) -> Result<(StructureAlgebra, Subspace), AlgebraError> {
        for g in generators {
            if g.len() != self.dim {
                return Err(AlgebraError::BadShape("generator length mismatch".into()));
            }
        }
        let mut span = Subspace::span(self.dim, generators);
        loop {
            let mut products = Vec::new();
            for u in span.basis() {
                for v in span.basis() {
                    products.push(self.mul(u, v));
                }
            }
            let next = span.sum(&Subspace::span(self.dim, &products));
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        let sub = self.induced_on(&span)?;
        Ok((sub, span))
    }

    /// The algebra structure induced on a multiplicatively closed subspace,
    /// in its echelon-basis coordinates.
    pub fn induced_on(&self, x: &Subspace) -> Result<StructureAlgebra, AlgebraError> {
        assert_eq!(x.ambient_dim(), self.dim);
        let d = x.dim();
        let mut constants = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let p = self.mul(&x.basis()[i], &x.basis()[j]);
                match x.coords_of(&p) {
                    Some(c) => constants.push(c),
                    None => {
                        return Err(AlgebraError::NotClosed {
                            witness: format!("b_{} · b_{} escapes the subspace", i, j),
                        })
                    }
                }
            }
        }
        let alg = StructureAlgebra { dim: d, constants, unit: None, assoc: AssocStatus::Unchecked };
        let unit = alg.solve_unit();
        Ok(StructureAlgebra { unit, ..alg })
    }

    /// The unique two-sided unit of a multiplicatively closed subspace, in
    /// ambient coordinates, if one exists. The zero subspace is unital with
    /// unit 0.
    pub fn unit_of(&self, x: &Subspace) -> Result<Option<Vec<Rat>>, AlgebraError> {
        let induced = self.induced_on(x)?;
        Ok(induced.solve_unit().map(|u| x.from_coords(&u)))
    }

    /// Solves `u·e_j = e_j·u = e_j` for all basis `e_j` in this algebra's own
    /// coordinates.
    pub fn solve_unit(&self) -> Option<Vec<Rat>> {
        let d = self.dim;
        if d == 0 {
            return Some(vec![]);
        }
        if let Some(u) = &self.unit {
            return Some(u.clone());
        }
        // unknowns: coordinates of u; equations: u·e_j = e_j and e_j·u = e_j
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..d {
            for r in 0..d {
                // Σ_i u_i (e_i e_j)_r = δ_{jr}
                let mut row = vzero(d);
                for (i, item) in row.iter_mut().enumerate() {
                    *item = self.basis_product(i, j)[r].clone();
                }
                rows.push(row);
                rhs.push(if j == r { Rat::one() } else { Rat::zero() });
                let mut row = vzero(d);
                for (i, item) in row.iter_mut().enumerate() {
                    *item = self.basis_product(j, i)[r].clone();
                }
                rows.push(row);
                rhs.push(if j == r { Rat::one() } else { Rat::zero() });
            }
        }
        Mat::from_rows(rows).solve(&rhs)
    }

    /// Quotient by a verified two-sided ideal. Returns the quotient algebra
    /// (basis: standard vectors at the non-pivot columns of `ideal`) and the
    /// canonical projection matrix.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(StructureAlgebra, Mat), AlgebraError> {
        if let Some(w) = self.ideal_witness(ideal) {
            return Err(AlgebraError::NotAnIdeal { witness: w });
        }
        let q_dim = self.dim - ideal.dim();
        let pivot_set: std::collections::BTreeSet<usize> = ideal.pivots().iter().copied().collect();
        let coset_reps: Vec<usize> = (0..self.dim).filter(|c| !pivot_set.contains(c)).collect();
        // projection: reduce each standard basis vector modulo the ideal
        let mut projection = Mat::zeros(q_dim, self.dim);
        for j in 0..self.dim {
            match coset_reps.binary_search(&j) {
                Ok(k) => projection.set(k, j, Rat::one()),
                Err(_) => {
                    let row = ideal.pivots().iter().position(|&p| p == j).unwrap();
                    // e_j ≡ e_j - basis_row (mod ideal): entries live on coset columns
                    for (k, &c) in coset_reps.iter().enumerate() {
                        projection.set(k, j, -ideal.basis()[row][c].clone());
                    }
                }
            }
        }
        let mut constants = Vec::with_capacity(q_dim * q_dim);
        for &a in &coset_reps {
            for &b in &coset_reps {
                constants.push(projection.apply(self.basis_product(a, b)));
            }
        }
        let unit = self.unit.as_ref().map(|u| projection.apply(u));
        let quotient =
            StructureAlgebra { dim: q_dim, constants, unit, assoc: AssocStatus::Unchecked };
        Ok((quotient, projection))
    }

    /// Idempotency and non-degeneracy of a two-sided ideal. The zero ideal
    /// counts as both, vacuously.
    pub fn ideal_diagnostics(&self, x: &Subspace) -> Result<IdealDiagnostics, AlgebraError> {
        if let Some(w) = self.ideal_witness(x) {
            return Err(AlgebraError::NotAnIdeal { witness: w });
        }
        let d = x.dim();
        if d == 0 {
            return Ok(IdealDiagnostics { idempotent: true, nondegenerate: true });
        }
        let mut products = Vec::new();
        for u in x.basis() {
            for v in x.basis() {
                products.push(self.mul(u, v));
            }
        }
        let idempotent = Subspace::span(self.dim, &products) == *x;

        // annihilator kernels of the multiplication pairing
        let mut left_rows = Vec::new();
        let mut right_rows = Vec::new();
        for b in x.basis() {
            // row blocks: c ↦ (Σ_i c_i b_i)·b and b·(Σ_i c_i b_i)
            for r in 0..self.dim {
                let mut row_l = vzero(d);
                let mut row_r = vzero(d);
                for i in 0..d {
                    row_l[i] = self.mul(&x.basis()[i], b)[r].clone();
                    row_r[i] = self.mul(b, &x.basis()[i])[r].clone();
                }
                left_rows.push(row_l);
                right_rows.push(row_r);
            }
        }
        let left_ann = Mat::from_rows(left_rows).nullspace();
        let right_ann = Mat::from_rows(right_rows).nullspace();
        Ok(IdealDiagnostics {
            idempotent,
            nondegenerate: left_ann.is_empty() && right_ann.is_empty(),
        })
    }

    /// Basis of the space of multiplier pairs `(L, R)` of this algebra:
    /// `L(ab) = L(a)b`, `R(ab) = aR(b)`, `R(a)b = aL(b)` for all `a`, `b`.
    pub fn multiplier_space(&self) -> Vec<MultiplierPair> {
        let d = self.dim;
        if d == 0 {
            return Vec::new();
        }
        // unknowns: L row-major (d²), then R row-major (d²)
        let unknowns = 2 * d * d;
        let l_idx = |r: usize, c: usize| r * d + c;
        let r_idx = |r: usize, c: usize| d * d + r * d + c;
        let mut rows = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let m_ij = self.basis_product(i, j);
                for r in 0..d {
                    // L(e_i e_j) = L(e_i)·e_j
                    let mut row = vzero(unknowns);
                    for c in 0..d {
                        row[l_idx(r, c)] += &m_ij[c];
                        row[l_idx(c, i)] -= &self.basis_product(c, j)[r];
                    }
                    rows.push(row);
                    // R(e_i e_j) = e_i·R(e_j)
                    let mut row = vzero(unknowns);
                    for c in 0..d {
                        row[r_idx(r, c)] += &m_ij[c];
                        row[r_idx(c, j)] -= &self.basis_product(i, c)[r];
                    }
                    rows.push(row);
                    // R(e_i)·e_j = e_i·L(e_j)
                    let mut row = vzero(unknowns);
                    for c in 0..d {
                        row[r_idx(c, i)] += &self.basis_product(c, j)[r];
                        row[l_idx(c, j)] -= &self.basis_product(i, c)[r];
                    }
                    rows.push(row);
                }
            }
        }
        Mat::from_rows(rows)
            .nullspace()
            .into_iter()
            .map(|sol| {
                let mut left = Mat::zeros(d, d);
                let mut right = Mat::zeros(d, d);
                for r in 0..d {
                    for c in 0..d {
                        left.set(r, c, sol[l_idx(r, c)].clone());
                        right.set(r, c, sol[r_idx(r, c)].clone());
                    }
                }
                MultiplierPair { left, right }
            })
            .collect()
    }

    /// Whether `L ∘ R' = R' ∘ L` for all multiplier pairs `(L, R)`, `(L', R')`.
    /// Checking a basis of the solution space suffices by bilinearity.
    pub fn is_lr_associative(&self) -> bool {
        let basis = self.multiplier_space();
        for p in &basis {
            for q in &basis {
                if p.left.mul(&q.right) != q.right.mul(&p.left) {
                    return false;
                }
            }
        }
        true
    }

    /// Semiprimeness (no nonzero nilpotent two-sided ideal) over the
    /// rationals, via the radical of the trace form of the left regular
    /// representation, after adjoining a unit when absent. Valid precisely
    /// because the ground field has characteristic zero.
    pub fn is_semiprime(&self) -> Result<bool, AlgebraError> {
        self.require_associative()?;
        let (ambient, embedded_dim) = match &self.unit {
            Some(_) => (self.clone(), None),
            None => (self.adjoin_unit(), Some(self.dim)),
        };
        let d = ambient.dim;
        let left: Vec<Mat> =
            (0..d).map(|i| ambient.left_mult_matrix(&ambient.basis_vector(i))).collect();
        let mut gram = Mat::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, left[i].mul(&left[j]).trace());
            }
        }
        let radical = Subspace::span(d, &gram.nullspace());
        match embedded_dim {
            None => Ok(radical.is_zero()),
            Some(orig) => {
                // original algebra sits in coordinates 1..=orig
                let emb: Vec<Vec<Rat>> = (0..orig)
                    .map(|i| {
                        let mut v = vzero(d);
                        v[i + 1] = Rat::one();
                        v
                    })
                    .collect();
                let a_image = Subspace::span(d, &emb);
                Ok(radical.intersect(&a_image).is_zero())
            }
        }
    }

    /// Unitalization: adjoins a formal unit as coordinate 0.
    fn adjoin_unit(&self) -> StructureAlgebra {
        let d = self.dim + 1;
        let mut constants = vec![vzero(d); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut v = vzero(d);
                match (i, j) {
                    (0, 0) => v[0] = Rat::one(),
                    (0, _) => v[j] = Rat::one(),
                    (_, 0) => v[i] = Rat::one(),
                    _ => {
                        let p = self.basis_product(i - 1, j - 1);
                        for (k, c) in p.iter().enumerate() {
                            v[k + 1] = c.clone();
                        }
                    }
                }
                constants[i * d + j] = v;
            }
        }
        let mut unit = vzero(d);
        unit[0] = Rat::one();
        StructureAlgebra { dim: d, constants, unit: Some(unit), assoc: AssocStatus::Unchecked }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealDiagnostics {
    pub idempotent: bool,
    pub nondegenerate: bool,
}

/// A multiplier pair on an algebra, as matrices in that algebra's own
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierPair {
    pub left: Mat,
    pub right: Mat,
}

impl MultiplierPair {
    /// Checks the defining identities on all basis pairs of `x`.
    pub fn is_valid_on(&self, x: &StructureAlgebra) -> bool {
        let d = x.dim();
        for i in 0..d {
            for j in 0..d {
                let prod = x.basis_product(i, j);
                let ei = x.basis_vector(i);
                let ej = x.basis_vector(j);
                let l_ei = self.left.apply(&ei);
                let r_ej = self.right.apply(&ej);
                let r_ei = self.right.apply(&ei);
                let l_ej = self.left.apply(&ej);
                if self.left.apply(prod) != x.mul(&l_ei, &ej)
                    || self.right.apply(prod) != x.mul(&ei, &r_ej)
                    || x.mul(&r_ei, &ej) != x.mul(&ei, &l_ej)
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of checking a linear map for multiplicativity (and optionally
/// bijectivity) between two structure-constant algebras.
#[derive(Clone, Debug)]
pub struct HomCheck {
    /// First basis pair where `M(e_i e_j) ≠ M(e_i) M(e_j)`.
    pub multiplicative_witness: Option<(usize, usize)>,
    pub rank: usize,
    pub bijective: bool,
}

impl HomCheck {
    pub fn is_hom(&self) -> bool {
        self.multiplicative_witness.is_none()
    }

    pub fn passes(&self, require_bijective: bool) -> bool {
        self.is_hom() && (!require_bijective || self.bijective)
    }
}

/// Checks `M(xy) = M(x)M(y)` on basis pairs of `source`; `M` maps source
/// coordinates to target coordinates. Combine with [`HomCheck::passes`] to
/// additionally demand bijectivity.
pub fn verify_linear_hom(
    source: &StructureAlgebra,
    target: &StructureAlgebra,
    m: &Mat,
) -> Result<HomCheck, AlgebraError> {
    if m.rows() != target.dim() || m.cols() != source.dim() {
        return Err(AlgebraError::BadShape(format!(
            "map is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let mut witness = None;
    'outer: for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = m.apply(source.basis_product(i, j));
            let rhs = target.mul(&m.apply(&source.basis_vector(i)), &m.apply(&source.basis_vector(j)));
            if lhs != rhs {
                witness = Some((i, j));
                break 'outer;
            }
        }
    }
    let rank = m.rank();
    let bijective = rank == source.dim() && source.dim() == target.dim();
    Ok(HomCheck { multiplicative_witness: witness, rank, bijective })
}

fn columns_to_mat(rows: usize, cols: Vec<Vec<Rat>>) -> Mat {
    let mut m = Mat::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        m.set_column(j, col);
    }
    m
}

/// Span of all products `u·v` with `u`, `v` in `x`, inside the ambient
/// algebra.
pub fn product_span(a: &StructureAlgebra, x: &Subspace, y: &Subspace) -> Subspace {
    let mut products = Vec::new();
    for u in x.basis() {
        for v in y.basis() {
            products.push(a.mul(u, v));
        }
    }
    Subspace::span(a.dim(), &products)
}

pub use crate::subspace::is_zero_vec;
