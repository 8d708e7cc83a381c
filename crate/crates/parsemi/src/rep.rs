//! Partial representations of an inverse semigroup in a unital algebra, and
//! the two bridges to partial actions.
//!
//! A partial representation assigns each semigroup element `s` an element
//! `π(s)` of a unital associative algebra subject to
//!
//! ```text
//! (i)   π(s*)π(s)π(t) = π(s*)π(st)
//! (ii)  π(s)π(t)π(t*) = π(st)π(t*)
//! (iii) π(s)π(s*)π(s) = π(s)
//! ```
//!
//! The idempotents `ε_s = π(s)π(s*)` generate a commutative subalgebra `A`;
//! sandwiching by `π(s)` restricts to a partial action on `A`
//! ([`action_from_rep`]), and conversely a partial action with unital
//! carriers induces a partial representation in its crossed product
//! ([`rep_from_action`]). Quotienting by the order-relation ideal `J` and
//! mapping `Σ a_sδ_s ↦ Σ a_s π̃(s)` connects the two pictures
//! ([`rep_quotient`], [`phi_hom`]).

use std::sync::Arc;

use num_traits::One;
use thiserror::Error;

use crate::action::PartialAction;
use crate::algebra::{verify_linear_hom, AlgebraError, StructureAlgebra};
use crate::crossed::{CrossedError, CrossedProduct};
use crate::linalg::{vis_zero, vzero, Mat};
use crate::report::AxiomReport;
use crate::scalar::Rat;
use crate::semigroup::InverseSemigroup;
use crate::subspace::Subspace;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("target algebra has no unit")]
    TargetNotUnital,
    #[error("target algebra is not associative")]
    TargetNotAssociative,
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("representation fails its axioms: {0}")]
    InvalidRep(String),
    #[error("carrier X_{0} has no unit")]
    NonUnitalIdeal(usize),
    #[error("derived action fails the partial-action axioms: {0}")]
    ActionAxiomFailure(String),
    #[error("map is not well defined on the quotient: {0}")]
    WellDefinednessBreach(String),
    #[error("map is not multiplicative: {0}")]
    HomomorphismBreach(String),
    #[error(transparent)]
    Crossed(#[from] CrossedError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A map `s ↦ π(s)` into a unital associative algebra.
#[derive(Clone, Debug)]
pub struct PartialRep {
    semigroup: Arc<InverseSemigroup>,
    target: Arc<StructureAlgebra>,
    assignment: Vec<Vec<Rat>>,
}

impl PartialRep {
    pub fn new(
        semigroup: Arc<InverseSemigroup>,
        target: Arc<StructureAlgebra>,
        assignment: Vec<Vec<Rat>>,
    ) -> Result<Self, RepError> {
        if assignment.len() != semigroup.size() {
            return Err(RepError::BadShape(format!(
                "expected {} assignments, got {}",
                semigroup.size(),
                assignment.len()
            )));
        }
        for (s, v) in assignment.iter().enumerate() {
            if v.len() != target.dim() {
                return Err(RepError::BadShape(format!(
                    "π({}) has length {}, target dimension is {}",
                    s,
                    v.len(),
                    target.dim()
                )));
            }
        }
        Ok(PartialRep { semigroup, target, assignment })
    }

    /// The faithful realization by partial permutation matrices: `π(s)` is
    /// the 0/1 matrix of `x ↦ sx` on the domain `{x : s*s·x = x}`, inside the
    /// full `|S| × |S|` matrix algebra.
    pub fn wagner_preston(semigroup: Arc<InverseSemigroup>) -> Self {
        let n = semigroup.size();
        let target = Arc::new(StructureAlgebra::matrix_algebra(n));
        let assignment = semigroup
            .elements()
            .map(|s| {
                let domain_idem = semigroup.mul(semigroup.inv(s), s);
                let mut v = vzero(n * n);
                for x in semigroup.elements() {
                    if semigroup.mul(domain_idem, x) == x {
                        let sx = semigroup.mul(s, x);
                        v[sx * n + x] = Rat::one();
                    }
                }
                v
            })
            .collect();
        PartialRep { semigroup, target, assignment }
    }

    pub fn semigroup(&self) -> &Arc<InverseSemigroup> {
        &self.semigroup
    }

    pub fn target(&self) -> &Arc<StructureAlgebra> {
        &self.target
    }

    pub fn of(&self, s: usize) -> &[Rat] {
        &self.assignment[s]
    }

    /// The idempotent `ε_s = π(s)π(s*)`.
    pub fn epsilon(&self, s: usize) -> Vec<Rat> {
        self.target.mul(&self.assignment[s], &self.assignment[self.semigroup.inv(s)])
    }

    /// Checks the three defining identities over all pairs, plus target
    /// sanity (unital, associative).
    pub fn verify(&self) -> Result<AxiomReport, RepError> {
        if self.target.unit().is_none() {
            return Err(RepError::TargetNotUnital);
        }
        if !self.target.is_associative() {
            return Err(RepError::TargetNotAssociative);
        }
        let sg = &self.semigroup;
        let b = &self.target;
        let n = sg.size();
        let mut report = AxiomReport::new();

        let mut w1 = None;
        let mut w2 = None;
        for s in 0..n {
            let star = sg.inv(s);
            for t in 0..n {
                let lhs =
                    b.mul(&b.mul(&self.assignment[star], &self.assignment[s]), &self.assignment[t]);
                let rhs = b.mul(&self.assignment[star], &self.assignment[sg.mul(s, t)]);
                if lhs != rhs && w1.is_none() {
                    w1 = Some((s, t));
                }
                let tstar = sg.inv(t);
                let lhs =
                    b.mul(&b.mul(&self.assignment[s], &self.assignment[t]), &self.assignment[tstar]);
                let rhs = b.mul(&self.assignment[sg.mul(s, t)], &self.assignment[tstar]);
                if lhs != rhs && w2.is_none() {
                    w2 = Some((s, t));
                }
            }
        }
        report.record("(i) π(s*)π(s)π(t) = π(s*)π(st)", w1.is_none(), || {
            format!("(s,t) = {:?}", w1.unwrap())
        });
        report.record("(ii) π(s)π(t)π(t*) = π(st)π(t*)", w2.is_none(), || {
            format!("(s,t) = {:?}", w2.unwrap())
        });

        let w3 = (0..n).find(|&s| {
            let star = sg.inv(s);
            b.mul(&b.mul(&self.assignment[s], &self.assignment[star]), &self.assignment[s])
                != self.assignment[s]
        });
        report.record("(iii) π(s)π(s*)π(s) = π(s)", w3.is_none(), || {
            format!("s = {}", w3.unwrap())
        });
        Ok(report)
    }

    /// The ε-calculus: idempotency, commutation, the shift identity
    /// `π(s)ε_t = ε_{st}π(s)`, and the product expansion
    /// `ε_sε_t = π(ss*t)π(t*s)π(s*tt*)`.
    pub fn epsilon_calculus_report(&self) -> AxiomReport {
        let sg = &self.semigroup;
        let b = &self.target;
        let n = sg.size();
        let eps: Vec<Vec<Rat>> = (0..n).map(|s| self.epsilon(s)).collect();
        let mut report = AxiomReport::new();

        let idem = (0..n).find(|&s| b.mul(&eps[s], &eps[s]) != eps[s]);
        report.record("ε_s idempotent", idem.is_none(), || format!("s = {}", idem.unwrap()));

        let mut comm = None;
        let mut shift = None;
        let mut expansion = None;
        for s in 0..n {
            for t in 0..n {
                if comm.is_none() && b.mul(&eps[s], &eps[t]) != b.mul(&eps[t], &eps[s]) {
                    comm = Some((s, t));
                }
                if shift.is_none() {
                    let lhs = b.mul(&self.assignment[s], &eps[t]);
                    let rhs = b.mul(&eps[sg.mul(s, t)], &self.assignment[s]);
                    if lhs != rhs {
                        shift = Some((s, t));
                    }
                }
                if expansion.is_none() {
                    let star_s = sg.inv(s);
                    let star_t = sg.inv(t);
                    let a = sg.mul(sg.mul(s, star_s), t);
                    let c = sg.mul(star_t, s);
                    let d = sg.mul(sg.mul(star_s, t), star_t);
                    let rhs = b.mul(
                        &b.mul(&self.assignment[a], &self.assignment[c]),
                        &self.assignment[d],
                    );
                    if b.mul(&eps[s], &eps[t]) != rhs {
                        expansion = Some((s, t));
                    }
                }
            }
        }
        report.record("ε_s ε_t = ε_t ε_s", comm.is_none(), || format!("(s,t) = {:?}", comm.unwrap()));
        report.record("π(s)ε_t = ε_st π(s)", shift.is_none(), || {
            format!("(s,t) = {:?}", shift.unwrap())
        });
        report.record("ε_s ε_t = π(ss*t)π(t*s)π(s*tt*)", expansion.is_none(), || {
            format!("(s,t) = {:?}", expansion.unwrap())
        });
        report
    }
}

/// A partial action carved out of a partial representation: the base is the
/// subalgebra `A` generated by the `ε_s` inside the representation's target,
/// kept together with its embedding subspace.
#[derive(Clone, Debug)]
pub struct DerivedAction {
    pub action: PartialAction,
    /// `A` as a subspace of the representation target, for coordinate moves.
    pub carrier: Subspace,
}

/// Builds the action `α_s(a) = π(s)·a·π(s*)` on the subalgebra generated by
/// the idempotents `ε_s`, with carriers `X_s = ε_s·A`. Fails loudly if the
/// result does not satisfy the partial-action axioms.
pub fn action_from_rep(rep: &PartialRep) -> Result<DerivedAction, RepError> {
    let verified = rep.verify()?;
    if !verified.passed() {
        let first = verified.failures().next().unwrap();
        return Err(RepError::InvalidRep(format!(
            "{} ({})",
            first.name,
            first.witness.clone().unwrap_or_default()
        )));
    }
    let sg = rep.semigroup().clone();
    let b = rep.target();
    let n = sg.size();
    let eps: Vec<Vec<Rat>> = (0..n).map(|s| rep.epsilon(s)).collect();
    let (sub_algebra, carrier) = b.subalgebra_generated(&eps)?;
    let sub_algebra = Arc::new(sub_algebra.with_assoc_checked());
    let a_dim = sub_algebra.dim();

    // X_s = ε_s·A, in A-coordinates
    let mut ideals = Vec::with_capacity(n);
    for eps_s in &eps {
        let eps_coords = carrier
            .coords_of(eps_s)
            .ok_or_else(|| RepError::ActionAxiomFailure("ε_s outside its own span".into()))?;
        let mut products = Vec::with_capacity(a_dim);
        for i in 0..a_dim {
            products.push(sub_algebra.mul(&eps_coords, &sub_algebra.basis_vector(i)));
        }
        ideals.push(Subspace::span(a_dim, &products));
    }

    // α_s in carrier coordinates: a ↦ π(s)·a·π(s*) sandwich in the target
    let mut maps = Vec::with_capacity(n);
    for s in 0..n {
        let star = sg.inv(s);
        let dom = &ideals[star];
        let cod = &ideals[s];
        let mut cols = Vec::with_capacity(dom.dim());
        for x in dom.basis() {
            let ambient = carrier.from_coords(x);
            let image = b.mul(&b.mul(rep.of(s), &ambient), rep.of(star));
            let in_a = carrier.coords_of(&image).ok_or_else(|| {
                RepError::ActionAxiomFailure(format!("π({s})·a·π({s}*) escapes A"))
            })?;
            let in_xs = cod.coords_of(&in_a).ok_or_else(|| {
                RepError::ActionAxiomFailure(format!("π({s})·a·π({s}*) escapes X_{s}"))
            })?;
            cols.push(in_xs);
        }
        let mut m = Mat::zeros(cod.dim(), dom.dim());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        maps.push(m);
    }

    let action = PartialAction::new(sg, sub_algebra, ideals, maps)
        .map_err(|e| RepError::ActionAxiomFailure(e.to_string()))?;
    let report = action.verify();
    if !report.passed() {
        let first = report.failures().next().unwrap();
        return Err(RepError::ActionAxiomFailure(format!(
            "{} ({})",
            first.name,
            first.witness.clone().unwrap_or_default()
        )));
    }
    Ok(DerivedAction { action, carrier })
}

/// The representation `π_α(s) = coset of 1_sδ_s` for an already-built
/// crossed product whose carriers are all unital.
pub fn induced_rep(crossed: &CrossedProduct) -> Result<PartialRep, RepError> {
    let action = crossed.action();
    let sg = action.semigroup();
    if !crossed.quotient().is_associative() {
        return Err(RepError::TargetNotAssociative);
    }
    let mut assignment = Vec::with_capacity(sg.size());
    for s in sg.elements() {
        let unit = action.ideal_unit(s).ok_or(RepError::NonUnitalIdeal(s))?;
        assignment.push(crossed.coset_of_monomial(s, &unit)?);
    }
    PartialRep::new(sg.clone(), crossed.quotient().clone(), assignment)
}

/// The representation `π_α(s) = coset of 1_sδ_s` inside the crossed-product
/// quotient of a validated action whose carriers are all unital.
pub fn rep_from_action(action: &PartialAction) -> Result<(CrossedProduct, PartialRep), RepError> {
    let sg = action.semigroup();
    for s in sg.elements() {
        action.ideal_unit(s).ok_or(RepError::NonUnitalIdeal(s))?;
    }
    let crossed = CrossedProduct::build(action)?;
    let rep = induced_rep(&crossed)?;
    Ok((crossed, rep))
}

/// Equivalence of representations over one semigroup: `phi` maps the target
/// of `second` isomorphically onto the target of `first` with
/// `first(s) = phi(second(s))`.
pub fn verify_rep_equivalence(
    first: &PartialRep,
    second: &PartialRep,
    phi: &Mat,
) -> Result<(bool, Option<String>), RepError> {
    if first.semigroup().size() != second.semigroup().size() {
        return Err(RepError::BadShape("representations over different semigroups".into()));
    }
    let hom = verify_linear_hom(second.target(), first.target(), phi)
        .map_err(|e| RepError::BadShape(e.to_string()))?;
    if !hom.passes(true) {
        return Ok((false, Some("map is not an algebra isomorphism".into())));
    }
    for s in first.semigroup().elements() {
        if phi.apply(second.of(s)) != first.of(s) {
            return Ok((false, Some(format!("π({s}) != φ(π'({s}))"))));
        }
    }
    Ok((true, None))
}

/// The order-relation quotient of a representation target: `J` is the ideal
/// generated by `a·π(s) − a·π(t)` over all basis `a` and strict order pairs
/// `s < t`, and `π̃` is the composite with the projection.
#[derive(Clone, Debug)]
pub struct RepQuotient {
    pub ideal: Subspace,
    pub quotient: Arc<StructureAlgebra>,
    pub projection: Mat,
    pub pi_tilde: PartialRep,
}

pub fn rep_quotient(rep: &PartialRep) -> Result<RepQuotient, RepError> {
    let verified = rep.verify()?;
    if !verified.passed() {
        let first = verified.failures().next().unwrap();
        return Err(RepError::InvalidRep(first.name.clone()));
    }
    let b = rep.target();
    let sg = rep.semigroup();
    let mut generators = Vec::new();
    for (s, t) in sg.strict_order_pairs() {
        let diff = crate::linalg::vsub(rep.of(s), rep.of(t));
        for i in 0..b.dim() {
            generators.push(b.mul(&b.basis_vector(i), &diff));
        }
    }
    let ideal = b.ideal_closure(&generators);
    let (quotient, projection) = b.quotient(&ideal)?;
    let quotient = Arc::new(quotient.with_assoc_checked());
    let assignment: Vec<Vec<Rat>> =
        sg.elements().map(|s| projection.apply(rep.of(s))).collect();
    let pi_tilde = PartialRep::new(sg.clone(), quotient.clone(), assignment)?;
    Ok(RepQuotient { ideal, quotient, projection, pi_tilde })
}

/// The comparison homomorphism `Σ a_sδ_s ↦ Σ a_s·π̃(s)` from the crossed
/// product of the derived action into the quotient target. Returns the map
/// on quotient coordinates along with the verification report
/// (well-definedness on the relation ideal, multiplicativity, and
/// compatibility `φ ∘ π_α = π̃`).
pub fn phi_hom(
    rq: &RepQuotient,
    derived: &DerivedAction,
    crossed: &CrossedProduct,
) -> Result<(Mat, AxiomReport), RepError> {
    let target = &rq.quotient;
    let action = &derived.action;
    let l_dim = crossed.formal_algebra().dim();

    // φ on L: basis (s, i) ↦ a · π̃(s) with a the i-th basis vector of X_s
    let mut phi_l = Mat::zeros(target.dim(), l_dim);
    for (flat, &(s, i)) in crossed.blocks().iter().enumerate() {
        let a_coords = &action.ideal(s).basis()[i];
        let ambient = derived.carrier.from_coords(a_coords);
        let image = target.mul(&ambient, rq.pi_tilde.of(s));
        for (r, v) in image.into_iter().enumerate() {
            phi_l.set(r, flat, v);
        }
    }

    let mut report = AxiomReport::new();
    let undefined = crossed
        .relation_ideal()
        .basis()
        .iter()
        .position(|g| !vis_zero(&phi_l.apply(g)));
    report.record("vanishes on the relation ideal", undefined.is_none(), || {
        format!("ideal basis vector {} has nonzero image", undefined.unwrap())
    });
    if let Some(ix) = undefined {
        return Err(RepError::WellDefinednessBreach(format!("relation ideal vector {}", ix)));
    }

    // induced map on the quotient via the coset-representative section
    let reps = crossed.coset_representatives();
    let mut phi = Mat::zeros(target.dim(), reps.len());
    for (k, &flat) in reps.iter().enumerate() {
        for r in 0..target.dim() {
            phi.set(r, k, phi_l.get(r, flat).clone());
        }
    }

    let hom = verify_linear_hom(crossed.quotient(), target, &phi)?;
    report.record("multiplicative", hom.is_hom(), || {
        format!("basis pair {:?}", hom.multiplicative_witness.unwrap())
    });
    if let Some(w) = hom.multiplicative_witness {
        return Err(RepError::HomomorphismBreach(format!("basis pair {:?}", w)));
    }

    // φ ∘ π_α = π̃, with π_α(s) the coset of 1_s δ_s
    let mut intertwine = None;
    for s in action.semigroup().elements() {
        let unit = action
            .ideal_unit(s)
            .ok_or(RepError::NonUnitalIdeal(s))?;
        let coset = crossed.coset_of_monomial(s, &unit)?;
        if phi.apply(&coset) != rq.pi_tilde.of(s) {
            intertwine = Some(s);
            break;
        }
    }
    report.record("φ ∘ π_α = π̃", intertwine.is_none(), || {
        format!("s = {}", intertwine.unwrap())
    });

    Ok((phi, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn wp(sg: InverseSemigroup) -> PartialRep {
        PartialRep::wagner_preston(Arc::new(sg))
    }

    #[test]
    fn wagner_preston_is_strict_and_transposed() {
        for sg in [
            InverseSemigroup::cyclic_group(3),
            InverseSemigroup::chain_semilattice(2),
            InverseSemigroup::symmetric_inverse_monoid(2),
        ] {
            let rep = wp(sg);
            let b = rep.target().clone();
            let s_ref = rep.semigroup().clone();
            for s in s_ref.elements() {
                // π(s*) is the transpose of π(s)
                let n = s_ref.size();
                let star = s_ref.inv(s);
                for r in 0..n {
                    for c in 0..n {
                        assert_eq!(rep.of(s)[r * n + c], rep.of(star)[c * n + r]);
                    }
                }
                for t in s_ref.elements() {
                    // strictness: π(s)π(t) = π(st)
                    assert_eq!(
                        b.mul(rep.of(s), rep.of(t)),
                        rep.of(s_ref.mul(s, t)).to_vec(),
                        "π not strict at ({s}, {t})"
                    );
                }
            }
            assert!(rep.verify().unwrap().passed());
            assert!(rep.epsilon_calculus_report().passed());
        }
    }

    #[test]
    fn cyclic_group_wagner_preston_is_permutations() {
        let rep = wp(InverseSemigroup::cyclic_group(3));
        let n = 3;
        for s in 0..n {
            // permutation matrix: one entry per row and column
            let m = rep.of(s);
            for r in 0..n {
                let row_ones = (0..n).filter(|c| m[r * n + c] == rat(1)).count();
                assert_eq!(row_ones, 1);
            }
        }
    }

    #[test]
    fn chain_semilattice_wagner_preston_shapes() {
        let rep = wp(InverseSemigroup::chain_semilattice(2));
        // the top acts as the identity matrix, the bottom is rank deficient
        let id_entries: Vec<Rat> = rep.of(1).to_vec();
        assert_eq!(id_entries, vec![rat(1), rat(0), rat(0), rat(1)]);
        let bottom = rep.of(0);
        let rank = Mat::from_rows(vec![
            vec![bottom[0].clone(), bottom[1].clone()],
            vec![bottom[2].clone(), bottom[3].clone()],
        ])
        .rank();
        assert_eq!(rank, 1);
    }

    #[test]
    fn broken_assignment_fails_axiom_three() {
        let sg = Arc::new(InverseSemigroup::cyclic_group(2));
        let b = Arc::new(StructureAlgebra::matrix_algebra(2));
        // π(g) nilpotent: π(g)π(g)π(g) = 0 ≠ π(g)
        let mut pi_g = vzero(4);
        pi_g[1] = rat(1); // E_01
        let assignment = vec![b.unit().unwrap().clone(), pi_g];
        let rep = PartialRep::new(sg, b, assignment).unwrap();
        let report = rep.verify().unwrap();
        assert!(!report.passed());
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.iter().any(|name| name.contains("(iii)")));
    }

    #[test]
    fn strict_group_rep_derives_the_trivial_action() {
        // permutation representation of Z_2: ε_s = identity for all s, so
        // A = span{1} and the derived action is global on one dimension
        let rep = wp(InverseSemigroup::cyclic_group(2));
        let derived = action_from_rep(&rep).unwrap();
        assert_eq!(derived.action.algebra().dim(), 1);
        for s in 0..2 {
            assert!(derived.action.ideal(s).is_full());
            assert!(derived.action.map(s).is_identity());
        }
    }

    #[test]
    fn wagner_preston_sim2_derived_action_passes() {
        let rep = wp(InverseSemigroup::symmetric_inverse_monoid(2));
        let derived = action_from_rep(&rep).unwrap();
        let report = derived.action.verify();
        assert!(report.passed(), "{:?}", report.failures().next());
        // ε-transport: α_s(ε_{s*}) = ε_s in carrier coordinates
        let sg = derived.action.semigroup().clone();
        for s in sg.elements() {
            let star = sg.inv(s);
            let eps_star = derived.carrier.coords_of(&rep.epsilon(star)).unwrap();
            let eps_s = derived.carrier.coords_of(&rep.epsilon(s)).unwrap();
            assert_eq!(derived.action.apply(s, &eps_star).unwrap(), eps_s);
            // round trip is the identity on X_s
            let round =
                derived.action.map(s).mul(derived.action.map(star));
            assert!(round.is_identity());
        }
    }

    #[test]
    fn rep_from_action_on_trivial_actions() {
        let action = PartialAction::trivial(
            Arc::new(InverseSemigroup::cyclic_group(2)),
            Arc::new(StructureAlgebra::field()),
        )
        .unwrap();
        let (crossed, rep) = rep_from_action(&action).unwrap();
        assert_eq!(crossed.quotient().dim(), 2);
        assert!(rep.verify().unwrap().passed());

        // chain on the field: δ_e and δ_1 project to the same coset
        let action = PartialAction::trivial(
            Arc::new(InverseSemigroup::chain_semilattice(2)),
            Arc::new(StructureAlgebra::field()),
        )
        .unwrap();
        let (crossed, rep) = rep_from_action(&action).unwrap();
        assert_eq!(crossed.quotient().dim(), 1);
        assert_eq!(rep.of(0), rep.of(1));
        assert!(rep.verify().unwrap().passed());
    }

    #[test]
    fn rep_from_action_requires_unital_carriers() {
        // the zero-product line is an ideal of itself without a unit
        let sg = Arc::new(InverseSemigroup::chain_semilattice(2));
        let alg = Arc::new(StructureAlgebra::zero_product(1));
        let action = PartialAction::trivial(sg, alg).unwrap();
        assert!(action.verify().passed());
        match rep_from_action(&action) {
            Err(RepError::NonUnitalIdeal(_)) => {}
            other => panic!("expected NonUnitalIdeal, got {other:?}"),
        }
    }

    #[test]
    fn rep_equivalence_by_conjugation() {
        let rep = wp(InverseSemigroup::cyclic_group(2));
        let b = rep.target().clone();
        let (ok, _) = verify_rep_equivalence(&rep, &rep, &Mat::identity(4)).unwrap();
        assert!(ok);

        // conjugate by the swap permutation matrix: g ↦ u g u⁻¹
        let n = 2;
        let mut u = vzero(4);
        u[1] = rat(1);
        u[n * n - n] = rat(1); // E_01 + E_10
        let conj_cols: Vec<Vec<Rat>> = (0..4)
            .map(|k| {
                let e = b.basis_vector(k);
                b.mul(&b.mul(&u, &e), &u)
            })
            .collect();
        let mut conj = Mat::zeros(4, 4);
        for (j, col) in conj_cols.iter().enumerate() {
            conj.set_column(j, col);
        }
        let conj_assignment: Vec<Vec<Rat>> =
            (0..2).map(|s| conj.apply(rep.of(s))).collect();
        let conj_rep =
            PartialRep::new(rep.semigroup().clone(), b.clone(), conj_assignment).unwrap();
        assert!(conj_rep.verify().unwrap().passed());
        let inv_cols: Vec<Vec<Rat>> = (0..4)
            .map(|k| {
                let e = b.basis_vector(k);
                b.mul(&b.mul(&u, &e), &u)
            })
            .collect();
        let mut inv_conj = Mat::zeros(4, 4);
        for (j, col) in inv_cols.iter().enumerate() {
            inv_conj.set_column(j, col);
        }
        let (ok, why) = verify_rep_equivalence(&rep, &conj_rep, &inv_conj).unwrap();
        assert!(ok, "{why:?}");

        // different target dimensions can never be equivalent
        let small = PartialRep::new(
            rep.semigroup().clone(),
            Arc::new(StructureAlgebra::field()),
            vec![vec![rat(1)], vec![rat(1)]],
        )
        .unwrap();
        let rect = Mat::zeros(4, 1);
        let (ok, _) = verify_rep_equivalence(&rep, &small, &rect).unwrap();
        assert!(!ok);
    }

    #[test]
    fn rep_quotient_of_groups_is_trivial() {
        let rep = wp(InverseSemigroup::cyclic_group(3));
        let rq = rep_quotient(&rep).unwrap();
        assert!(rq.ideal.is_zero());
        assert_eq!(rq.quotient.dim(), rep.target().dim());
        assert!(rq.pi_tilde.verify().unwrap().passed());
    }

    #[test]
    fn rep_quotient_collapses_chains() {
        // Wagner–Preston of the 2-chain: J is generated inside the full 2x2
        // matrix algebra, which is simple, so everything collapses
        let rep = wp(InverseSemigroup::chain_semilattice(2));
        let rq = rep_quotient(&rep).unwrap();
        assert_eq!(rq.ideal.dim(), 4);
        assert_eq!(rq.quotient.dim(), 0);
        assert!(rq.pi_tilde.verify().unwrap().passed());
    }

    #[test]
    fn phi_hom_on_collapsed_wagner_preston() {
        for sg in [
            InverseSemigroup::symmetric_inverse_monoid(1),
            InverseSemigroup::symmetric_inverse_monoid(2),
        ] {
            let rep = wp(sg);
            let rq = rep_quotient(&rep).unwrap();
            let derived = action_from_rep(&rq.pi_tilde).unwrap();
            let crossed = CrossedProduct::build(&derived.action).unwrap();
            let (phi, report) = phi_hom(&rq, &derived, &crossed).unwrap();
            assert!(report.passed(), "{:?}", report.failures().next());
            assert_eq!(phi.cols(), crossed.quotient().dim());
        }
    }
}
