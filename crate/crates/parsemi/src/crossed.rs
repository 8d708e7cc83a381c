//! The algebraic crossed product of a partial action.
//!
//! From a verified partial action this module builds the formal-sum algebra
//! `L` (basis: pairs of a semigroup element `s` and a basis vector of its
//! carrier `X_s`, written `aδ_s`), the relation ideal `I` spanned by the
//! closures of `aδ_r − aδ_t` for `r ≤ t`, and the quotient `L/I` with its
//! canonical projection. The generator-level product is
//! `(aδ_s)·(bδ_t) = α_s(α_{s*}(a)·b) δ_{st}`, and its well-definedness
//! (membership of the result in `X_s ∩ X_{st}`) is checked during
//! construction rather than assumed.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::action::PartialAction;
use crate::algebra::{AlgebraError, IdealDiagnostics, StructureAlgebra};
use crate::linalg::{vis_zero, vzero, Mat};
use crate::report::AxiomReport;
use crate::scalar::Rat;
use crate::subspace::Subspace;

#[derive(Debug, Error)]
pub enum CrossedError {
    #[error("partial action failed verification: {0}")]
    NotValidated(String),
    #[error("semigroup has no declared unit")]
    NoUnit,
    #[error("well-definedness breach at (s,t) = ({s}, {t}): product escapes X_s ∩ X_st")]
    WellDefinednessBreach { s: usize, t: usize },
    #[error("formal sum term at {s} is not a member of X_{s}")]
    MembershipBreach { s: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A formal finite sum `Σ a_s δ_s` with `a_s ∈ X_s`, stored per element in
/// `X_s`-coordinates. Zero terms are pruned.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalSum {
    terms: BTreeMap<usize, Vec<Rat>>,
}

impl FormalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds `a·δ_s` from an ambient vector, checking membership in `X_s`.
    pub fn monomial(action: &PartialAction, s: usize, ambient: &[Rat]) -> Result<Self, CrossedError> {
        let coords = action
            .ideal(s)
            .coords_of(ambient)
            .ok_or(CrossedError::MembershipBreach { s })?;
        let mut terms = BTreeMap::new();
        if !vis_zero(&coords) {
            terms.insert(s, coords);
        }
        Ok(FormalSum { terms })
    }

    pub fn terms(&self) -> &BTreeMap<usize, Vec<Rat>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The crossed product bundle: `L`, the relation ideal `I`, the quotient and
/// its projection.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    action: PartialAction,
    /// Flat basis index of `L` → (semigroup element, basis index in its carrier).
    blocks: Vec<(usize, usize)>,
    /// Per-element starting offset into the flat basis.
    offsets: Vec<usize>,
    formal_algebra: StructureAlgebra,
    relation_ideal: Subspace,
    quotient: Arc<StructureAlgebra>,
    projection: Mat,
}

impl CrossedProduct {
    /// Runs the full pipeline: verify the action, build `L`, build `I`,
    /// quotient, and certify the quotient's associativity status.
    pub fn build(action: &PartialAction) -> Result<Self, CrossedError> {
        let report = action.verify();
        if !report.passed() {
            let first = report.failures().next().unwrap();
            return Err(CrossedError::NotValidated(format!(
                "{}: {}",
                first.name,
                first.witness.clone().unwrap_or_default()
            )));
        }
        if action.semigroup().unit().is_none() {
            return Err(CrossedError::NoUnit);
        }
        let FormalLayout { algebra: formal_algebra, blocks, offsets } =
            build_formal_algebra(action)?;
        let relation_ideal = build_relation_ideal(action, &formal_algebra, &offsets)?;
        let (quotient, projection) = formal_algebra.quotient(&relation_ideal)?;
        let quotient = Arc::new(quotient.with_assoc_checked());
        Ok(CrossedProduct {
            action: action.clone(),
            blocks,
            offsets,
            formal_algebra,
            relation_ideal,
            quotient,
            projection,
        })
    }

    pub fn action(&self) -> &PartialAction {
        &self.action
    }

    pub fn formal_algebra(&self) -> &StructureAlgebra {
        &self.formal_algebra
    }

    pub fn relation_ideal(&self) -> &Subspace {
        &self.relation_ideal
    }

    pub fn quotient(&self) -> &Arc<StructureAlgebra> {
        &self.quotient
    }

    pub fn projection(&self) -> &Mat {
        &self.projection
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Flat `L`-indices of the standard basis vectors representing the
    /// quotient basis: the non-pivot columns of the relation ideal, in the
    /// order the quotient uses them.
    pub fn coset_representatives(&self) -> Vec<usize> {
        self.relation_ideal.complement_columns()
    }

    /// Flat `L`-coordinates of a formal sum.
    pub fn flatten(&self, x: &FormalSum) -> Vec<Rat> {
        let mut v = vzero(self.formal_algebra.dim());
        for (&s, coords) in x.terms() {
            for (j, c) in coords.iter().enumerate() {
                v[self.offsets[s] + j] = c.clone();
            }
        }
        v
    }

    /// Formal sum from flat `L`-coordinates.
    pub fn unflatten(&self, v: &[Rat]) -> FormalSum {
        let mut terms: BTreeMap<usize, Vec<Rat>> = BTreeMap::new();
        for (flat, value) in v.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let (s, j) = self.blocks[flat];
            let entry = terms.entry(s).or_insert_with(|| vzero(self.action.ideal(s).dim()));
            entry[j] = value.clone();
        }
        FormalSum { terms }
    }

    /// Product in `L` by bilinear extension of the generator formula.
    pub fn mul_formal(&self, x: &FormalSum, y: &FormalSum) -> FormalSum {
        let product = self.formal_algebra.mul(&self.flatten(x), &self.flatten(y));
        self.unflatten(&product)
    }

    /// Coset of a formal sum in the quotient.
    pub fn project(&self, x: &FormalSum) -> Vec<Rat> {
        self.projection.apply(&self.flatten(x))
    }

    /// Embeds `a·δ_s` and projects it in one step.
    pub fn coset_of_monomial(&self, s: usize, ambient: &[Rat]) -> Result<Vec<Rat>, CrossedError> {
        Ok(self.project(&FormalSum::monomial(&self.action, s, ambient)?))
    }
}

struct FormalLayout {
    algebra: StructureAlgebra,
    blocks: Vec<(usize, usize)>,
    offsets: Vec<usize>,
}

fn build_formal_algebra(action: &PartialAction) -> Result<FormalLayout, CrossedError> {
    let sg = action.semigroup();
    let base = action.algebra();
    let n = sg.size();
    let mut offsets = Vec::with_capacity(n);
    let mut blocks = Vec::new();
    let mut dim = 0;
    for s in 0..n {
        offsets.push(dim);
        for j in 0..action.ideal(s).dim() {
            blocks.push((s, j));
        }
        dim += action.ideal(s).dim();
    }

    let mut constants = vec![vzero(dim); dim * dim];
    for (a_flat, &(s, i)) in blocks.iter().enumerate() {
        // α_{s*}(a) for the i-th basis vector of X_s: column i of the map,
        // expanded to ambient coordinates
        let mut e = vzero(action.ideal(s).dim());
        e[i] = num_traits::One::one();
        let pulled = action.ideal(sg.inv(s)).from_coords(&action.map(sg.inv(s)).apply(&e));
        for (b_flat, &(t, j)) in blocks.iter().enumerate() {
            let b = &action.ideal(t).basis()[j];
            let inner = base.mul(&pulled, b);
            // membership in X_{s*} ∩ X_t, then push forward with α_s
            let Some(inner_coords) = action.ideal(sg.inv(s)).coords_of(&inner) else {
                return Err(CrossedError::WellDefinednessBreach { s, t });
            };
            let pushed = action.ideal(s).from_coords(&action.map(s).apply(&inner_coords));
            let st = sg.mul(s, t);
            let Some(out_coords) = action.ideal(st).coords_of(&pushed) else {
                return Err(CrossedError::WellDefinednessBreach { s, t });
            };
            let mut out = vzero(dim);
            for (k, c) in out_coords.into_iter().enumerate() {
                out[offsets[st] + k] = c;
            }
            constants[a_flat * dim + b_flat] = out;
        }
    }

    let mut algebra = StructureAlgebra::from_constants(dim, constants, None)?;
    // 1_A δ_1 is the unit of L whenever the base algebra is unital
    if let (Some(one), Some(base_unit)) = (sg.unit(), base.unit()) {
        if let Some(coords) = action.ideal(one).coords_of(base_unit) {
            let mut u = vzero(dim);
            for (k, c) in coords.into_iter().enumerate() {
                u[offsets[one] + k] = c;
            }
            if let Ok(with_unit) = algebra.clone().with_unit(u) {
                algebra = with_unit;
            }
        }
    }
    Ok(FormalLayout { algebra, blocks, offsets })
}

fn build_relation_ideal(
    action: &PartialAction,
    formal: &StructureAlgebra,
    offsets: &[usize],
) -> Result<Subspace, CrossedError> {
    let sg = action.semigroup();
    let mut generators = Vec::new();
    for (r, t) in sg.strict_order_pairs() {
        for a in action.ideal(r).basis() {
            // aδ_r − aδ_t; membership of a in X_t is the carrier
            // monotonicity X_r ⊆ X_t
            let r_coords = action.ideal(r).coords_of(a).expect("own basis vector");
            let Some(t_coords) = action.ideal(t).coords_of(a) else {
                return Err(CrossedError::MembershipBreach { s: t });
            };
            let mut g = vzero(formal.dim());
            for (k, c) in r_coords.into_iter().enumerate() {
                g[offsets[r] + k] = c;
            }
            for (k, c) in t_coords.into_iter().enumerate() {
                g[offsets[t] + k] -= c;
            }
            generators.push(g);
        }
    }
    Ok(formal.ideal_closure(&generators))
}

/// Exhaustive basis-triple associativity decision with witness.
pub fn associativity_report(algebra: &StructureAlgebra) -> (bool, Option<(usize, usize, usize)>) {
    match algebra.associativity_witness() {
        None => (true, None),
        Some(w) => (false, Some(w)),
    }
}

/// Per-carrier hypotheses and diagnostics for the associativity theorem.
#[derive(Clone, Debug)]
pub struct CarrierReport {
    pub element: usize,
    pub dim: usize,
    pub lr_associative: bool,
    pub diagnostics: IdealDiagnostics,
    pub unital: bool,
}

/// Result of running the associativity check suite on one action: the
/// hypothesis per carrier, the conclusion on the crossed product, and the
/// implication verdicts.
#[derive(Clone, Debug)]
pub struct AssociativitySuite {
    pub carriers: Vec<CarrierReport>,
    pub base_semiprime: bool,
    pub crossed_associative: bool,
    pub associativity_witness: Option<(usize, usize, usize)>,
    /// (L,R)-associativity of every carrier implies associativity of the
    /// crossed product. A `false` here falsifies the theorem.
    pub implication_ok: bool,
    /// Idempotent-or-nondegenerate carriers imply associativity.
    pub corollary_1_2_ok: bool,
    /// A semiprime base implies associativity regardless of the action.
    pub corollary_1_4_ok: bool,
    pub dims: (usize, usize, usize),
}

impl AssociativitySuite {
    pub fn all_ok(&self) -> bool {
        self.implication_ok && self.corollary_1_2_ok && self.corollary_1_4_ok
    }

    pub fn into_axiom_report(self) -> AxiomReport {
        let mut report = AxiomReport::new();
        report.record("theorem 1.1 implication", self.implication_ok, || {
            format!(
                "all carriers (L,R)-associative but crossed product fails at {:?}",
                self.associativity_witness
            )
        });
        report.record("corollary 1.2 implication", self.corollary_1_2_ok, || {
            format!(
                "idempotent/non-degenerate carriers but witness {:?}",
                self.associativity_witness
            )
        });
        report.record("corollary 1.4 implication", self.corollary_1_4_ok, || {
            format!("semiprime base but witness {:?}", self.associativity_witness)
        });
        report
    }
}

/// Computes hypotheses, conclusion and implications for one action.
///
/// Identical carriers are deduplicated before the multiplier-space solve,
/// which is the expensive step.
pub fn associativity_suite(action: &PartialAction) -> Result<AssociativitySuite, CrossedError> {
    let crossed = CrossedProduct::build(action)?;
    let base = action.algebra();
    let sg = action.semigroup();

    let mut lr_cache: Vec<(Subspace, bool, IdealDiagnostics, bool)> = Vec::new();
    let mut carriers = Vec::new();
    for s in sg.elements() {
        let x = action.ideal(s).clone();
        let cached = lr_cache.iter().find(|(sub, ..)| *sub == x);
        let (lr, diag, unital) = match cached {
            Some((_, lr, diag, unital)) => (*lr, *diag, *unital),
            None => {
                let induced = base.induced_on(&x)?;
                let lr = induced.is_lr_associative();
                let diag = base.ideal_diagnostics(&x)?;
                let unital = induced.solve_unit().is_some();
                lr_cache.push((x.clone(), lr, diag, unital));
                (lr, diag, unital)
            }
        };
        carriers.push(CarrierReport {
            element: s,
            dim: x.dim(),
            lr_associative: lr,
            diagnostics: diag,
            unital,
        });
    }

    let base_semiprime = base.is_semiprime()?;
    let (crossed_associative, associativity_witness) = associativity_report(crossed.quotient());

    let all_lr = carriers.iter().all(|c| c.lr_associative);
    let all_cor12 = carriers.iter().all(|c| c.diagnostics.idempotent || c.diagnostics.nondegenerate);
    Ok(AssociativitySuite {
        base_semiprime,
        crossed_associative,
        associativity_witness,
        implication_ok: !all_lr || crossed_associative,
        corollary_1_2_ok: !all_cor12 || crossed_associative,
        corollary_1_4_ok: !base_semiprime || crossed_associative,
        dims: (
            crossed.formal_algebra().dim(),
            crossed.relation_ideal().dim(),
            crossed.quotient().dim(),
        ),
        carriers,
    })
}
