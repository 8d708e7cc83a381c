//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime and asserting the stated budget.
//!
//! Everything here is exact arithmetic; expected values are either trivial
//! facts about the constructions or derived from the independent oracles
//! embedded in the tests.

use std::sync::Arc;
use std::time::{Duration, Instant};

use parsemi::algebra::StructureAlgebra;
use parsemi::corpus::generate_corpus;
use parsemi::crossed::associativity_suite;
use parsemi::expansion::{enumerate_fp_semigroup, pr_presentation, theorem_2_7_pipeline, EnumLimits, EnumStatus};
use parsemi::rep::{action_from_rep, phi_hom, rep_from_action, rep_quotient, PartialRep};
use parsemi::semigroup::{verify_table, InverseSemigroup};

const CORPUS_SEED: u64 = 2;
const CORPUS_SIZE: usize = 50;

fn finish(name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("criterion {name}: pass ({elapsed:?})");
    assert!(elapsed < budget, "{name} exceeded its runtime budget: {elapsed:?}");
}

/// Criterion 1: inverse-semigroup axioms on the reference instances.
#[test]
fn criterion_1_inverse_semigroup_axioms() {
    let start = Instant::now();

    // independent oracle: partial injections on n points number Σ C(n,k)²·k!
    let fact = |k: u64| (1..=k).product::<u64>().max(1);
    let choose = |n: u64, k: u64| fact(n) / (fact(k) * fact(n - k));
    let expected: u64 = (0..=2).map(|k| choose(2, k) * choose(2, k) * fact(k)).sum();
    assert_eq!(expected, 7);

    let sim2 = InverseSemigroup::symmetric_inverse_monoid(2);
    assert_eq!(sim2.size(), 7);
    assert!(sim2.verify().passed());

    for n in 1..=6 {
        assert!(InverseSemigroup::cyclic_group(n).verify().passed(), "cyclic group {n}");
    }

    // the 2-element left-zero table must be rejected with a
    // non-commuting-idempotent witness
    let report = verify_table(2, &[0, 0, 1, 1], None);
    assert!(!report.passed());
    let commute = report
        .checks
        .iter()
        .find(|c| c.name == "idempotents commute")
        .expect("idempotent commutation check present");
    assert_eq!(commute.verdict, parsemi::report::Verdict::Fail);
    assert!(commute.witness.is_some());
    assert!(InverseSemigroup::from_table(&[vec![0, 0], vec![1, 1]], None).is_err());

    finish("1 (inverse-semigroup axioms)", start, Duration::from_secs(1));
}

/// Criterion 2: expansion enumeration agrees with the brute-force
/// word-closure oracle, element for element.
#[test]
fn criterion_2_expansion_enumeration_vs_oracle() {
    let start = Instant::now();

    for (sg, expected) in [
        (InverseSemigroup::chain_semilattice(2), 2usize),
        (InverseSemigroup::cyclic_group(2), 3usize),
    ] {
        let presentation = pr_presentation(&sg);
        let enumerated = enumerate_fp_semigroup(&presentation, &EnumLimits::default());
        assert_eq!(enumerated.status, EnumStatus::Complete);
        assert_eq!(enumerated.size(), expected);

        let oracle = oracle_word_classes(&presentation, 8, 4);
        assert_eq!(oracle.len(), expected, "oracle class count");
        // element-for-element: each normal form lands in its own oracle class
        let mut seen = std::collections::BTreeSet::new();
        for nf in &enumerated.elements {
            let class = oracle
                .iter()
                .position(|c| c.contains(nf))
                .expect("normal form present in an oracle class");
            assert!(seen.insert(class), "two normal forms share an oracle class");
        }
    }

    finish("2 (expansion enumeration vs oracle)", start, Duration::from_secs(5));
}

/// Criterion 3: the comparison pipeline on the three reference instances.
#[test]
fn criterion_3_isomorphism_pipeline() {
    for (name, sg, expected_dim) in [
        ("chain_semilattice(2)", InverseSemigroup::chain_semilattice(2), 1usize),
        ("cyclic_group(2)", InverseSemigroup::cyclic_group(2), 3usize),
        ("trivial semigroup", InverseSemigroup::cyclic_group(1), 1usize),
    ] {
        let start = Instant::now();
        let report = theorem_2_7_pipeline(&Arc::new(sg), &EnumLimits::default()).unwrap();
        assert!(report.passed(), "{name}: {:?}", report.checks.failures().next());
        assert_eq!(report.crossed_dim, expected_dim, "{name} crossed-product dimension");
        assert_eq!(report.quotient_dim, expected_dim, "{name} quotient dimension");
        let fixes = |check: &str| {
            report
                .checks
                .checks
                .iter()
                .any(|c| c.name == check && c.verdict == parsemi::report::Verdict::Pass)
        };
        assert!(fixes("φ∘ψ fixes every basis element"), "{name}");
        assert!(fixes("ψ∘φ fixes every basis element"), "{name}");
        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(10), "{name} took {elapsed:?}");
    }
    println!("criterion 3 (isomorphism pipeline): pass");
}

/// Criterion 4: over the seeded corpus, (L,R)-associative carriers never
/// produce a non-associative crossed product.
#[test]
fn criterion_4_associativity_implication_over_corpus() {
    let start = Instant::now();
    let corpus = generate_corpus(CORPUS_SEED, CORPUS_SIZE);
    assert!(corpus.len() >= 50);
    for instance in &corpus {
        let suite = associativity_suite(&instance.action).unwrap();
        assert!(suite.implication_ok, "{}", instance.label);
        let all_lr = suite.carriers.iter().all(|c| c.lr_associative);
        assert!(
            !all_lr || suite.crossed_associative,
            "{}: hypothesis holds but product is non-associative",
            instance.label
        );
    }
    finish("4 (associativity implication over corpus)", start, Duration::from_secs(60));
}

/// Criterion 5: the two sufficient conditions over the corpus — good
/// carriers, and semiprime bases.
#[test]
fn criterion_5_sufficient_conditions_over_corpus() {
    let start = Instant::now();
    for instance in generate_corpus(CORPUS_SEED, CORPUS_SIZE) {
        let suite = associativity_suite(&instance.action).unwrap();
        let good_carriers = suite.carriers.iter().all(|c| {
            c.unital || c.diagnostics.idempotent || c.diagnostics.nondegenerate
        });
        if good_carriers {
            assert!(suite.crossed_associative, "{}", instance.label);
        }
        if suite.base_semiprime {
            assert!(suite.crossed_associative, "{}", instance.label);
        }
        assert!(suite.corollary_1_2_ok && suite.corollary_1_4_ok, "{}", instance.label);
        // per-carrier form of the sufficient condition: an idempotent or
        // non-degenerate carrier is (L,R)-associative
        for carrier in &suite.carriers {
            if carrier.diagnostics.idempotent || carrier.diagnostics.nondegenerate {
                assert!(
                    carrier.lr_associative,
                    "{}: carrier {} good but not (L,R)-associative",
                    instance.label,
                    carrier.element
                );
            }
        }
    }
    finish("5 (sufficient conditions over corpus)", start, Duration::from_secs(60));
}

/// Criterion 6: the lemma suite on the four reference representations.
#[test]
fn criterion_6_lemma_suite() {
    let start = Instant::now();

    let mut reps: Vec<(String, PartialRep)> = Vec::new();
    for n in 1..=2 {
        let sg = Arc::new(InverseSemigroup::symmetric_inverse_monoid(n));
        reps.push((format!("wagner-preston sim({n})"), PartialRep::wagner_preston(sg)));
    }
    for (name, sg) in [
        ("iota chain(2)", InverseSemigroup::chain_semilattice(2)),
        ("iota cyclic(2)", InverseSemigroup::cyclic_group(2)),
    ] {
        let sg = Arc::new(sg);
        let pa = parsemi::expansion::kpar(&sg, &EnumLimits::default()).unwrap();
        reps.push((name.to_string(), pa.iota_rep(sg.clone()).unwrap()));
    }

    for (name, rep) in reps {
        let axioms = rep.verify().unwrap();
        assert!(axioms.passed(), "{name}: {:?}", axioms.failures().next());
        let eps = rep.epsilon_calculus_report();
        assert!(eps.passed(), "{name}: {:?}", eps.failures().next());

        // derived action satisfies the partial-action axioms
        let rq = rep_quotient(&rep).unwrap();
        let derived = action_from_rep(&rq.pi_tilde).unwrap();
        let action_report = derived.action.verify();
        assert!(action_report.passed(), "{name}: {:?}", action_report.failures().next());

        // induced representation of the crossed product passes its axioms
        let (crossed, induced) = rep_from_action(&derived.action).unwrap();
        let induced_report = induced.verify().unwrap();
        assert!(induced_report.passed(), "{name}: {:?}", induced_report.failures().next());

        // the comparison map is a well-defined homomorphism intertwining
        // the representations
        let (_, hom_report) = phi_hom(&rq, &derived, &crossed).unwrap();
        assert!(hom_report.passed(), "{name}: {:?}", hom_report.failures().next());
    }

    finish("6 (lemma suite)", start, Duration::from_secs(30));
}

/// Criterion 7: frozen diagnostics ground truth.
#[test]
fn criterion_7_diagnostics_ground_truth() {
    let start = Instant::now();

    assert!(StructureAlgebra::matrix_algebra(2).is_semiprime().unwrap());
    assert!(StructureAlgebra::product_of_fields(2).is_semiprime().unwrap());
    assert!(StructureAlgebra::product_of_fields(3).is_semiprime().unwrap());
    assert!(!StructureAlgebra::dual_numbers().is_semiprime().unwrap());

    // multiplier space dimensions, derived independently: a unital algebra
    // has exactly its inner multipliers (pinned by L(1)), and on a
    // zero-product line every pair of scalars satisfies the vacuous
    // constraints
    assert_eq!(StructureAlgebra::field().multiplier_space().len(), 1);
    assert_eq!(StructureAlgebra::zero_product(1).multiplier_space().len(), 2);
    assert_eq!(StructureAlgebra::matrix_algebra(2).multiplier_space().len(), 4);

    assert!(!StructureAlgebra::zero_product(2).is_lr_associative());

    finish("7 (diagnostics ground truth)", start, Duration::from_secs(10));
}

/// Criterion 8: byte-identical reports for identical seeds.
#[test]
fn criterion_8_determinism() {
    let start = Instant::now();

    let first = parsemi::corpus::corpus_report(CORPUS_SEED, 20);
    let second = parsemi::corpus::corpus_report(CORPUS_SEED, 20);
    assert_eq!(first.render_text(), second.render_text());
    assert_eq!(first.render_json(), second.render_json());

    let sg = Arc::new(InverseSemigroup::cyclic_group(2));
    let a = theorem_2_7_pipeline(&sg, &EnumLimits::default()).unwrap();
    let b = theorem_2_7_pipeline(&sg, &EnumLimits::default()).unwrap();
    let render = |r: &parsemi::expansion::PipelineReport| {
        let mut report = parsemi::report::Report::new("check-thm-2.7");
        report.dim("K_par", r.kpar_dim);
        report.dim("crossed product", r.crossed_dim);
        report.extend(r.checks.clone());
        report.render_json()
    };
    assert_eq!(render(&a), render(&b));

    // different seeds give different instance sequences
    let other = parsemi::corpus::corpus_report(CORPUS_SEED + 1, 20);
    assert_ne!(first.render_text(), other.render_text());

    finish("8 (determinism)", start, Duration::from_secs(30));
}

/// Brute-force word-closure oracle: unions all relation rewrites over words
/// up to `max_len` to a global fixpoint and returns the classes owning a
/// representative of length at most `count_len`. Independent of the
/// enumerator's demand-driven search.
#[allow(clippy::needless_range_loop)] // indices are union-find ids
fn oracle_word_classes(
    p: &parsemi::expansion::Presentation,
    max_len: usize,
    count_len: usize,
) -> Vec<Vec<Vec<usize>>> {
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..p.generator_count).map(|g| vec![g]).collect();
    while let Some(w) = frontier.pop() {
        if w.len() > max_len {
            continue;
        }
        words.push(w.clone());
        for g in 0..p.generator_count {
            let mut next = w.clone();
            next.push(g);
            if next.len() <= max_len {
                frontier.push(next);
            }
        }
    }
    words.sort();
    words.dedup();
    let index: std::collections::BTreeMap<Vec<usize>, usize> =
        words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    loop {
        let mut changed = false;
        for i in 0..words.len() {
            let w = words[i].clone();
            for (u, v) in &p.relations {
                for (from, to) in [(u, v), (v, u)] {
                    if from.len() > w.len() {
                        continue;
                    }
                    for pos in 0..=(w.len() - from.len()) {
                        if &w[pos..pos + from.len()] == from.as_slice() {
                            let mut res = Vec::new();
                            res.extend_from_slice(&w[..pos]);
                            res.extend_from_slice(to);
                            res.extend_from_slice(&w[pos + from.len()..]);
                            if let Some(&j) = index.get(&res) {
                                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                                if ri != rj {
                                    parent[ri.max(rj)] = ri.min(rj);
                                    changed = true;
                                }
                            }
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<Vec<usize>>> =
        std::collections::BTreeMap::new();
    for i in 0..words.len() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(words[i].clone());
    }
    classes.into_values().filter(|c| c.iter().any(|w| w.len() <= count_len)).collect()
}
