//! Seeded generation of verification instances.
//!
//! The corpus draws small semigroups, base algebras and action shapes from
//! fixed pools, so a seed pins the exact instance sequence and every report
//! derived from it byte-for-byte.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::action::PartialAction;
use crate::algebra::StructureAlgebra;
use crate::crossed::{associativity_suite, AssociativitySuite};
use crate::linalg::Mat;
use crate::rep::{action_from_rep, PartialRep};
use crate::report::{Check, Report};
use crate::semigroup::InverseSemigroup;
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub label: String,
    pub action: PartialAction,
}

fn semigroup_pool() -> Vec<(String, InverseSemigroup)> {
    let mut pool = Vec::new();
    for n in 1..=6 {
        pool.push((format!("cyclic{}", n), InverseSemigroup::cyclic_group(n)));
    }
    for n in 1..=4 {
        pool.push((format!("chain{}", n), InverseSemigroup::chain_semilattice(n)));
    }
    for n in 1..=2 {
        pool.push((format!("sim{}", n), InverseSemigroup::symmetric_inverse_monoid(n)));
    }
    let z2 = InverseSemigroup::cyclic_group(2);
    let chain2 = InverseSemigroup::chain_semilattice(2);
    pool.push(("cyclic2xcyclic2".into(), z2.direct_product(&z2)));
    pool.push(("cyclic2xchain2".into(), z2.direct_product(&chain2)));
    pool.push(("chain2xchain2".into(), chain2.direct_product(&chain2)));
    pool
}

fn algebra_pool() -> Vec<(String, StructureAlgebra)> {
    vec![
        ("field".into(), StructureAlgebra::field()),
        ("fields2".into(), StructureAlgebra::product_of_fields(2)),
        ("fields3".into(), StructureAlgebra::product_of_fields(3)),
        ("dual".into(), StructureAlgebra::dual_numbers()),
        ("mat2".into(), StructureAlgebra::matrix_algebra(2)),
    ]
}

/// Zero-padding: keep the full algebra on an inverse subsemigroup containing
/// the unit and assign the zero ideal elsewhere. Candidates failing the
/// axioms (absorption back into the subsemigroup) fall back to the unit-only
/// padding, which is always valid.
fn zero_padded(
    sg: &Arc<InverseSemigroup>,
    algebra: &Arc<StructureAlgebra>,
    rng: &mut ChaCha8Rng,
) -> PartialAction {
    let unit = sg.unit().expect("pool semigroups are unital");
    let mut keep: Vec<bool> = (0..sg.size()).map(|_| rng.gen_bool(0.5)).collect();
    keep[unit] = true;
    // close under multiplication and inverses
    loop {
        let mut changed = false;
        for s in sg.elements() {
            if keep[s] && !keep[sg.inv(s)] {
                keep[sg.inv(s)] = true;
                changed = true;
            }
            for t in sg.elements() {
                if keep[s] && keep[t] && !keep[sg.mul(s, t)] {
                    keep[sg.mul(s, t)] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let dim = algebra.dim();
    let build = |keep: &[bool]| {
        let ideals: Vec<Subspace> = keep
            .iter()
            .map(|&k| if k { Subspace::full(dim) } else { Subspace::zero(dim) })
            .collect();
        let maps: Vec<Mat> =
            keep.iter().map(|&k| if k { Mat::identity(dim) } else { Mat::empty(0) }).collect();
        PartialAction::new(sg.clone(), algebra.clone(), ideals, maps).expect("shapes consistent")
    };
    let candidate = build(&keep);
    if candidate.verify().passed() {
        return candidate;
    }
    let mut minimal = vec![false; sg.size()];
    minimal[unit] = true;
    build(&minimal)
}

/// Generates `size` deterministic instances from a seed.
pub fn generate_corpus(seed: u64, size: usize) -> Vec<CorpusInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let semigroups: Vec<(String, Arc<InverseSemigroup>)> =
        semigroup_pool().into_iter().map(|(n, s)| (n, Arc::new(s))).collect();
    let algebras: Vec<(String, Arc<StructureAlgebra>)> =
        algebra_pool().into_iter().map(|(n, a)| (n, Arc::new(a))).collect();

    let mut out = Vec::with_capacity(size);
    for index in 0..size {
        let (sg_name, sg) = &semigroups[rng.gen_range(0..semigroups.len())];
        let (alg_name, algebra) = &algebras[rng.gen_range(0..algebras.len())];
        let kind = rng.gen_range(0..3u8);
        let (label, action) = match kind {
            0 => (
                format!("{index:03}-trivial-{sg_name}-{alg_name}"),
                PartialAction::trivial(sg.clone(), algebra.clone())
                    .expect("pool algebras are associative"),
            ),
            1 => {
                let rep = PartialRep::wagner_preston(sg.clone());
                let derived =
                    action_from_rep(&rep).expect("derived actions satisfy the axioms");
                (format!("{index:03}-derived-{sg_name}"), derived.action)
            }
            _ => (
                format!("{index:03}-padded-{sg_name}-{alg_name}"),
                zero_padded(sg, algebra, &mut rng),
            ),
        };
        out.push(CorpusInstance { label, action });
    }
    out
}

/// Seeded actions over one fixed base algebra: trivial and zero-padded
/// shapes over pooled semigroups. Used by the semiprimeness command, where
/// the base is the user's algebra rather than a pool draw.
pub fn actions_over_algebra(
    algebra: &Arc<StructureAlgebra>,
    seed: u64,
    size: usize,
) -> Vec<(String, PartialAction)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let semigroups: Vec<(String, Arc<InverseSemigroup>)> =
        semigroup_pool().into_iter().map(|(n, s)| (n, Arc::new(s))).collect();
    (0..size)
        .map(|index| {
            let (sg_name, sg) = &semigroups[rng.gen_range(0..semigroups.len())];
            if rng.gen_bool(0.5) {
                (
                    format!("{index:03}-trivial-{sg_name}"),
                    PartialAction::trivial(sg.clone(), algebra.clone())
                        .expect("associative base"),
                )
            } else {
                (format!("{index:03}-padded-{sg_name}"), zero_padded(sg, algebra, &mut rng))
            }
        })
        .collect()
}

/// Runs the associativity suite over a seeded corpus, one check line per
/// instance, plus an aggregate verdict per implication.
pub fn corpus_report(seed: u64, size: usize) -> Report {
    let mut report = Report::new(format!("corpus --seed {} --corpus-size {}", seed, size));
    let mut all: Vec<(String, AssociativitySuite)> = Vec::new();
    for instance in generate_corpus(seed, size) {
        let suite = associativity_suite(&instance.action)
            .expect("corpus instances build crossed products");
        all.push((instance.label, suite));
    }
    for (label, suite) in &all {
        if suite.all_ok() {
            report.push(Check::pass(format!("instance {label}")));
        } else {
            report.push(Check::fail(
                format!("instance {label}"),
                format!("witness {:?}", suite.associativity_witness),
            ));
        }
    }
    let thm = all.iter().all(|(_, s)| s.implication_ok);
    let cor12 = all.iter().all(|(_, s)| s.corollary_1_2_ok);
    let cor14 = all.iter().all(|(_, s)| s.corollary_1_4_ok);
    report.push(if thm {
        Check::pass("theorem 1.1 implication over the corpus")
    } else {
        Check::fail("theorem 1.1 implication over the corpus", "see failing instances")
    });
    report.push(if cor12 {
        Check::pass("corollary 1.2 implication over the corpus")
    } else {
        Check::fail("corollary 1.2 implication over the corpus", "see failing instances")
    });
    report.push(if cor14 {
        Check::pass("corollary 1.4 implication over the corpus")
    } else {
        Check::fail("corollary 1.4 implication over the corpus", "see failing instances")
    });
    report.dim("instances", all.len());
    report
}
