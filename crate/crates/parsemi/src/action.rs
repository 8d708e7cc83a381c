//! Partial actions of a finite inverse semigroup on a structure-constant
//! algebra.
//!
//! A partial action assigns to every semigroup element `s` a two-sided ideal
//! `X_s` of the base algebra and a multiplicative linear bijection
//! `α_s : X_{s*} → X_s`, subject to the range condition
//! `α_s(X_{s*} ∩ X_t) = X_s ∩ X_{st}` and the composition law on the
//! appropriate domain. The verifier checks the full axiom list and reports
//! every failure, not just the first.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{verify_linear_hom, StructureAlgebra};
use crate::linalg::Mat;
use crate::report::AxiomReport;
use crate::scalar::Rat;
use crate::semigroup::InverseSemigroup;
use crate::subspace::Subspace;

#[derive(Debug, Error)]
pub enum ActionError {
    #[error("base algebra is not associative")]
    NotAssociative,
    #[error("bad shape: {0}")]
    BadShape(String),
}

#[derive(Clone, Debug)]
pub struct PartialAction {
    semigroup: Arc<InverseSemigroup>,
    algebra: Arc<StructureAlgebra>,
    /// `ideals[s]` is the carrier `X_s`.
    ideals: Vec<Subspace>,
    /// `maps[s]` sends `X_{s*}`-coordinates to `X_s`-coordinates, relative to
    /// the canonical echelon bases.
    maps: Vec<Mat>,
}

impl PartialAction {
    pub fn new(
        semigroup: Arc<InverseSemigroup>,
        algebra: Arc<StructureAlgebra>,
        ideals: Vec<Subspace>,
        maps: Vec<Mat>,
    ) -> Result<Self, ActionError> {
        let n = semigroup.size();
        if ideals.len() != n || maps.len() != n {
            return Err(ActionError::BadShape(format!(
                "expected {} ideals and maps, got {} and {}",
                n,
                ideals.len(),
                maps.len()
            )));
        }
        for (s, x) in ideals.iter().enumerate() {
            if x.ambient_dim() != algebra.dim() {
                return Err(ActionError::BadShape(format!(
                    "ideal {} lives in dimension {}, base algebra has {}",
                    s,
                    x.ambient_dim(),
                    algebra.dim()
                )));
            }
        }
        for (s, m) in maps.iter().enumerate() {
            let dom = ideals[semigroup.inv(s)].dim();
            let cod = ideals[s].dim();
            if m.rows() != cod || m.cols() != dom {
                return Err(ActionError::BadShape(format!(
                    "map {} is {}x{}, expected {}x{}",
                    s,
                    m.rows(),
                    m.cols(),
                    cod,
                    dom
                )));
            }
        }
        Ok(PartialAction { semigroup, algebra, ideals, maps })
    }

    /// The global action: every ideal is the whole algebra and every map is
    /// the identity.
    pub fn trivial(
        semigroup: Arc<InverseSemigroup>,
        algebra: Arc<StructureAlgebra>,
    ) -> Result<Self, ActionError> {
        if !algebra.is_associative() {
            return Err(ActionError::NotAssociative);
        }
        let n = semigroup.size();
        let dim = algebra.dim();
        let ideals = vec![Subspace::full(dim); n];
        let maps = vec![Mat::identity(dim); n];
        Self::new(semigroup, algebra, ideals, maps)
    }

    pub fn semigroup(&self) -> &Arc<InverseSemigroup> {
        &self.semigroup
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn ideal(&self, s: usize) -> &Subspace {
        &self.ideals[s]
    }

    pub fn map(&self, s: usize) -> &Mat {
        &self.maps[s]
    }

    /// Applies `α_s` to an ambient vector of `X_{s*}`; `None` if the vector
    /// is outside the domain.
    pub fn apply(&self, s: usize, v: &[Rat]) -> Option<Vec<Rat>> {
        let dom = &self.ideals[self.semigroup.inv(s)];
        let coords = dom.coords_of(v)?;
        Some(self.ideals[s].from_coords(&self.maps[s].apply(&coords)))
    }

    /// Image of a subspace of the domain ideal under `α_s`.
    pub fn image_of_subspace(&self, s: usize, sub: &Subspace) -> Option<Subspace> {
        let mut images = Vec::new();
        for v in sub.basis() {
            images.push(self.apply(s, v)?);
        }
        Some(Subspace::span(self.algebra.dim(), &images))
    }

    /// Full axiom report: ideals, bijectivity, multiplicativity, inverse
    /// compatibility, the range condition, the composition law, and
    /// unitality at the semigroup unit.
    pub fn verify(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        let sg = &self.semigroup;
        let alg = &self.algebra;
        let n = sg.size();

        report.record("base associative", alg.is_associative(), || {
            let (i, j, k) = alg.associativity_witness().unwrap();
            format!("basis triple ({}, {}, {})", i, j, k)
        });

        let mut bad_ideal = None;
        for s in 0..n {
            if let Some(w) = alg.ideal_witness(&self.ideals[s]) {
                bad_ideal = Some((s, w));
                break;
            }
        }
        report.record("carriers are ideals", bad_ideal.is_none(), || {
            let (s, w) = bad_ideal.clone().unwrap();
            format!("X_{}: {}", s, w)
        });

        let mut not_bijective = None;
        for s in 0..n {
            let m = &self.maps[s];
            if m.rows() != m.cols() || (m.rows() > 0 && m.inverse().is_none()) {
                not_bijective = Some(s);
                break;
            }
        }
        report.record("maps bijective", not_bijective.is_none(), || {
            format!("α_{} is not a linear bijection", not_bijective.unwrap())
        });

        // multiplicativity of each α_s on its domain ideal
        let mut not_mult = None;
        'mult: for s in 0..n {
            let dom = &self.ideals[sg.inv(s)];
            for a in dom.basis() {
                for b in dom.basis() {
                    let ab = alg.mul(a, b);
                    let lhs = match self.apply(s, &ab) {
                        Some(v) => v,
                        None => {
                            not_mult = Some((s, "product escapes the domain ideal".to_string()));
                            break 'mult;
                        }
                    };
                    let (fa, fb) = (self.apply(s, a).unwrap(), self.apply(s, b).unwrap());
                    if lhs != alg.mul(&fa, &fb) {
                        not_mult = Some((s, "α_s(ab) != α_s(a)α_s(b) on a basis pair".to_string()));
                        break 'mult;
                    }
                }
            }
        }
        report.record("maps multiplicative", not_mult.is_none(), || {
            let (s, w) = not_mult.clone().unwrap();
            format!("s = {}: {}", s, w)
        });

        let mut not_inverse = None;
        for s in 0..n {
            let round_trip = self.maps[sg.inv(s)].mul(&self.maps[s]);
            if !round_trip.is_identity() {
                not_inverse = Some(s);
                break;
            }
        }
        report.record("inverse compatibility", not_inverse.is_none(), || {
            format!("α_{{{}*}} ∘ α_{{{s}}} is not the identity", not_inverse.unwrap(), s = not_inverse.unwrap())
        });

        let mut range_witness = None;
        'range: for s in 0..n {
            for t in 0..n {
                let dom = self.ideals[sg.inv(s)].intersect(&self.ideals[t]);
                let expected = self.ideals[s].intersect(&self.ideals[sg.mul(s, t)]);
                match self.image_of_subspace(s, &dom) {
                    Some(image) if image == expected => {}
                    _ => {
                        range_witness = Some((s, t));
                        break 'range;
                    }
                }
            }
        }
        report.record("range condition", range_witness.is_none(), || {
            let (s, t) = range_witness.unwrap();
            format!("α_{s}(X_{{{s}*}} ∩ X_{t}) != X_{s} ∩ X_{{{s}·{t}}}", s = s, t = t)
        });

        let mut comp_witness = None;
        'comp: for s in 0..n {
            for t in 0..n {
                // domain: α_t⁻¹(X_t ∩ X_{s*}) = α_{t*}(X_t ∩ X_{s*})
                let inter = self.ideals[t].intersect(&self.ideals[sg.inv(s)]);
                let Some(domain) = self.image_of_subspace(sg.inv(t), &inter) else {
                    comp_witness = Some((s, t, "domain preimage undefined".to_string()));
                    break 'comp;
                };
                for a in domain.basis() {
                    let via_t = match self.apply(t, a).and_then(|x| self.apply(s, &x)) {
                        Some(v) => v,
                        None => {
                            comp_witness = Some((s, t, "α_s∘α_t undefined on domain".to_string()));
                            break 'comp;
                        }
                    };
                    let direct = match self.apply(sg.mul(s, t), a) {
                        Some(v) => v,
                        None => {
                            comp_witness =
                                Some((s, t, "domain vector outside X_{(st)*}".to_string()));
                            break 'comp;
                        }
                    };
                    if via_t != direct {
                        comp_witness = Some((s, t, "α_s(α_t(a)) != α_{st}(a)".to_string()));
                        break 'comp;
                    }
                }
            }
        }
        report.record("composition law", comp_witness.is_none(), || {
            let (s, t, w) = comp_witness.clone().unwrap();
            format!("(s,t) = ({}, {}): {}", s, t, w)
        });

        if let Some(one) = sg.unit() {
            let ok = self.ideals[one].is_full() && self.maps[one].is_identity();
            report.record("unit acts globally", ok, || {
                format!("X_1 must be the whole algebra with α_1 = id (element {})", one)
            });
        }

        report
    }

    /// Unit of `X_s`, if the ideal is a unital algebra.
    pub fn ideal_unit(&self, s: usize) -> Option<Vec<Rat>> {
        self.algebra.unit_of(&self.ideals[s]).ok().flatten()
    }
}

/// Checks that `phi` (base-coordinates of `a` to base-coordinates of `b`) is
/// an equivalence of partial actions over one semigroup: an algebra
/// isomorphism matching carriers and intertwining the maps.
pub fn verify_action_equivalence(
    a: &PartialAction,
    b: &PartialAction,
    phi: &Mat,
) -> Result<(bool, Option<String>), ActionError> {
    if a.semigroup.size() != b.semigroup.size() {
        return Err(ActionError::BadShape("actions over different semigroups".into()));
    }
    let hom = verify_linear_hom(&a.algebra, &b.algebra, phi)
        .map_err(|e| ActionError::BadShape(e.to_string()))?;
    if !hom.passes(true) {
        return Ok((false, Some("base map is not an algebra isomorphism".into())));
    }
    for s in 0..a.semigroup.size() {
        let image = a.ideals[s].image_under(|v| phi.apply(v), b.algebra.dim());
        if image != b.ideals[s] {
            return Ok((false, Some(format!("φ(X_{s}) differs from X'_{s}"))));
        }
        let dom = &a.ideals[a.semigroup.inv(s)];
        for v in dom.basis() {
            let lhs = phi.apply(&a.apply(s, v).expect("domain vector"));
            let rhs = match b.apply(s, &phi.apply(v)) {
                Some(x) => x,
                None => return Ok((false, Some(format!("φ does not map dom α_{s} into dom α'_{s}")))),
            };
            if lhs != rhs {
                return Ok((false, Some(format!("φ∘α_{s} != α'_{s}∘φ on a basis vector"))));
            }
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn arc_sg(s: InverseSemigroup) -> Arc<InverseSemigroup> {
        Arc::new(s)
    }

    fn arc_alg(a: StructureAlgebra) -> Arc<StructureAlgebra> {
        Arc::new(a)
    }

    #[test]
    fn trivial_actions_pass() {
        let cases: Vec<(InverseSemigroup, StructureAlgebra)> = vec![
            (InverseSemigroup::chain_semilattice(2), StructureAlgebra::field()),
            (InverseSemigroup::cyclic_group(2), StructureAlgebra::field()),
            (
                InverseSemigroup::symmetric_inverse_monoid(2),
                StructureAlgebra::product_of_fields(2),
            ),
            (InverseSemigroup::cyclic_group(3), StructureAlgebra::matrix_algebra(2)),
        ];
        for (sg, alg) in cases {
            let action = PartialAction::trivial(arc_sg(sg), arc_alg(alg)).unwrap();
            let report = action.verify();
            assert!(report.passed(), "{:?}", report.failures().next());
        }
    }

    #[test]
    fn trivial_action_requires_associative_base() {
        let mut constants = vec![crate::linalg::vzero(2); 4];
        constants[0] = vec![rat(0), rat(1)];
        constants[1] = vec![rat(1), rat(0)];
        let bad = StructureAlgebra::from_constants(2, constants, None).unwrap().with_assoc_checked();
        let err = PartialAction::trivial(arc_sg(InverseSemigroup::cyclic_group(2)), arc_alg(bad));
        assert!(matches!(err, Err(ActionError::NotAssociative)));
    }

    #[test]
    fn negated_map_fails_verification() {
        // on the 2-element group over the field, negating α_g breaks
        // multiplicativity: (-a)(-b) = ab but α(ab) = -(ab)
        let sg = arc_sg(InverseSemigroup::cyclic_group(2));
        let alg = arc_alg(StructureAlgebra::field());
        let ideals = vec![Subspace::full(1), Subspace::full(1)];
        let mut neg = Mat::identity(1);
        neg.set(0, 0, rat(-1));
        let maps = vec![Mat::identity(1), neg];
        let action = PartialAction::new(sg, alg, ideals, maps).unwrap();
        let report = action.verify();
        assert!(!report.passed());
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"maps multiplicative"));
    }

    #[test]
    fn order_monotonicity_of_carriers() {
        // derived fact: r ≤ t forces X_r ⊆ X_t on every verified action
        let sg = arc_sg(InverseSemigroup::symmetric_inverse_monoid(2));
        let alg = arc_alg(StructureAlgebra::product_of_fields(2));
        let action = PartialAction::trivial(sg.clone(), alg).unwrap();
        assert!(action.verify().passed());
        for (r, t) in sg.strict_order_pairs() {
            assert!(action.ideal(t).contains(action.ideal(r)));
        }
        for s in sg.elements() {
            let star = sg.inv(s);
            let ss = sg.mul(star, s);
            assert!(action.ideal(ss).contains(action.ideal(star)), "X_s* ⊆ X_s*s");
        }
    }

    #[test]
    fn equivalence_checks() {
        let sg = arc_sg(InverseSemigroup::cyclic_group(2));
        let a = PartialAction::trivial(sg.clone(), arc_alg(StructureAlgebra::field())).unwrap();
        let (ok, _) = verify_action_equivalence(&a, &a, &Mat::identity(1)).unwrap();
        assert!(ok);

        let b =
            PartialAction::trivial(sg.clone(), arc_alg(StructureAlgebra::product_of_fields(2)))
                .unwrap();
        let rect = Mat::zeros(2, 1);
        let (ok, why) = verify_action_equivalence(&a, &b, &rect).unwrap();
        assert!(!ok, "{why:?}");

        // swap automorphism intertwines the trivial action with itself
        let swap = Mat::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        let (ok, _) = verify_action_equivalence(&b, &b, &swap).unwrap();
        assert!(ok);
    }

    #[test]
    fn intersection_units_transport() {
        // α_s carries the unit of X_{s*} ∩ X_t to the unit of X_s ∩ X_{st}
        let sg = arc_sg(InverseSemigroup::symmetric_inverse_monoid(2));
        let alg = arc_alg(StructureAlgebra::product_of_fields(3));
        let action = PartialAction::trivial(sg.clone(), alg.clone()).unwrap();
        for s in sg.elements() {
            for t in sg.elements() {
                let dom = action.ideal(sg.inv(s)).intersect(action.ideal(t));
                let cod = action.ideal(s).intersect(action.ideal(sg.mul(s, t)));
                let du = alg.unit_of(&dom).unwrap();
                let cu = alg.unit_of(&cod).unwrap();
                if let (Some(du), Some(cu)) = (du, cu) {
                    assert_eq!(action.apply(s, &du).unwrap(), cu);
                }
            }
        }
    }
}
