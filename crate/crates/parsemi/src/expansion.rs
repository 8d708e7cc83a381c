//! The universal expansion semigroup on generators `[s]` and its semigroup
//! algebra.
//!
//! For an inverse semigroup `S`, the expansion is presented by one generator
//! per element of `S` and the relations
//!
//! ```text
//! (i)   [s*][s][t] = [s*][st]
//! (ii)  [s][t][t*]  = [st][t*]
//! (iii) [s][s*][s]  = [s]
//! ```
//!
//! The enumerator maintains a union-find congruence over discovered words,
//! applying relation pairs as two-sided rewrite equivalences at every
//! position and iterating to a fixpoint after each new word; an element is a
//! congruence class with its length-lex-least word as normal form. A
//! harvested table is only reported `Complete` when it passes a certificate
//! (all relations hold under the table, the table is compatible with
//! single-letter right multiplication, and every element is reachable from
//! the generators). Those conditions pin the result up to isomorphism, so a
//! certified table cannot be wrong — at worst enumeration gives up with
//! `CapExceeded`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::StructureAlgebra;
use crate::crossed::CrossedProduct;
use crate::linalg::{vis_zero, vzero, Mat};
use crate::rep::{
    action_from_rep, induced_rep, phi_hom, rep_quotient, PartialRep, RepError, RepQuotient,
};
use crate::report::AxiomReport;
use crate::semigroup::InverseSemigroup;

#[derive(Debug, Error)]
pub enum ExpansionError {
    #[error("enumeration exceeded its caps (elements ≤ {max_elements}, word length ≤ {max_word_len})")]
    CapExceeded { max_elements: usize, max_word_len: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Words over generator indices.
pub type Word = Vec<usize>;

/// A semigroup presentation: `generator_count` generators and a list of
/// equalities between nonempty words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub relations: Vec<(Word, Word)>,
}

/// The expansion presentation for an inverse semigroup: relations (i) and
/// (ii) for every ordered pair and (iii) for every element, deduplicated.
pub fn pr_presentation(sg: &InverseSemigroup) -> Presentation {
    let mut relations: BTreeSet<(Word, Word)> = BTreeSet::new();
    let mut add = |a: Word, b: Word| {
        if a != b {
            let pair = if a <= b { (a, b) } else { (b, a) };
            relations.insert(pair);
        }
    };
    for s in sg.elements() {
        let star = sg.inv(s);
        add(vec![s, star, s], vec![s]);
        for t in sg.elements() {
            add(vec![star, s, t], vec![star, sg.mul(s, t)]);
            let tstar = sg.inv(t);
            add(vec![s, t, tstar], vec![sg.mul(s, t), tstar]);
        }
    }
    Presentation { generator_count: sg.size(), relations: relations.into_iter().collect() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumStatus {
    Complete,
    CapExceeded,
}

/// Caps for the enumerator. Exceeding either yields `CapExceeded` rather
/// than an unbounded search.
#[derive(Clone, Copy, Debug)]
pub struct EnumLimits {
    pub max_elements: usize,
    pub max_word_len: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { max_elements: 10_000, max_word_len: 12 }
    }
}

impl EnumLimits {
    pub fn with_max_elements(max_elements: usize) -> Self {
        EnumLimits { max_elements, ..Default::default() }
    }
}

/// A concrete finite semigroup produced by enumeration: canonical
/// normal-form words, a multiplication table and the generator embedding.
#[derive(Clone, Debug)]
pub struct EnumeratedSemigroup {
    pub elements: Vec<Word>,
    /// Row-major `n × n` table of element indices.
    pub table: Vec<usize>,
    pub gen_map: Vec<usize>,
    pub status: EnumStatus,
}

impl EnumeratedSemigroup {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    /// Product of a word of generators, evaluated through the table.
    pub fn eval_word(&self, word: &[usize]) -> usize {
        let mut acc = self.gen_map[word[0]];
        for &g in &word[1..] {
            acc = self.mul(acc, self.gen_map[g]);
        }
        acc
    }

    /// Direct re-verification: associativity of the table, every relation
    /// instance, and reachability from the generators.
    pub fn verify(&self, presentation: &Presentation) -> AxiomReport {
        let n = self.size();
        let mut report = AxiomReport::new();
        report.record("enumeration complete", self.status == EnumStatus::Complete, || {
            "cap exceeded".into()
        });
        if self.status != EnumStatus::Complete {
            return report;
        }

        let mut assoc = None;
        'outer: for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        assoc = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        report.record("table associative", assoc.is_none(), || format!("{:?}", assoc.unwrap()));

        let broken = presentation
            .relations
            .iter()
            .position(|(u, v)| self.eval_word(u) != self.eval_word(v));
        report.record("relations hold", broken.is_none(), || {
            let (u, v) = &presentation.relations[broken.unwrap()];
            format!("relation {:?} = {:?}", u, v)
        });

        let mut reached = vec![false; n];
        let mut stack: Vec<usize> = self.gen_map.clone();
        while let Some(x) = stack.pop() {
            if !reached[x] {
                reached[x] = true;
                for &g in &self.gen_map {
                    stack.push(self.mul(x, g));
                }
            }
        }
        let unreachable = reached.iter().position(|r| !r);
        report.record("generated by the generators", unreachable.is_none(), || {
            format!("element {} unreachable", unreachable.unwrap())
        });
        report
    }
}

/// Length-lex order key.
fn llex(w: &Word) -> (usize, Word) {
    (w.len(), w.clone())
}

struct Congruence {
    ids: BTreeMap<Word, usize>,
    words: Vec<Word>,
    parent: Vec<usize>,
    /// Length-lex-least known word of each class root.
    least: Vec<Word>,
    max_word_len: usize,
    /// Current frontier: rewrites may only produce words up to this length.
    /// Growing it re-opens every word for another closure pass.
    bound: usize,
    relations: Vec<(Word, Word)>,
    /// Words whose rewrite closure is still pending.
    pending: Vec<usize>,
    processed: Vec<bool>,
}

impl Congruence {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop] = keep;
        if llex(&self.least[drop]) < llex(&self.least[keep]) {
            self.least[keep] = self.least[drop].clone();
        }
    }

    /// Inserts a word (if new) and schedules it for rewrite closure.
    fn intern(&mut self, w: Word) -> usize {
        if let Some(&id) = self.ids.get(&w) {
            return id;
        }
        let id = self.words.len();
        self.ids.insert(w.clone(), id);
        self.words.push(w.clone());
        self.parent.push(id);
        self.least.push(w);
        self.processed.push(false);
        self.pending.push(id);
        id
    }

    /// Applies every relation at every position of every pending word, both
    /// directions, interning and uniting the rewrites, to a fixpoint.
    fn close(&mut self) {
        while let Some(id) = self.pending.pop() {
            if self.processed[id] {
                continue;
            }
            self.processed[id] = true;
            let w = self.words[id].clone();
            for k in 0..self.relations.len() {
                let (u, v) = self.relations[k].clone();
                self.rewrite_occurrences(id, &w, &u, &v);
                self.rewrite_occurrences(id, &w, &v, &u);
            }
        }
    }

    fn rewrite_occurrences(&mut self, id: usize, w: &Word, from: &Word, to: &Word) {
        if from.len() > w.len() {
            return;
        }
        let limit = self.bound.max(w.len()).min(self.max_word_len);
        for pos in 0..=(w.len() - from.len()) {
            if &w[pos..pos + from.len()] == from.as_slice() {
                if w.len() - from.len() + to.len() > limit {
                    continue;
                }
                let mut rewritten = Vec::with_capacity(w.len() - from.len() + to.len());
                rewritten.extend_from_slice(&w[..pos]);
                rewritten.extend_from_slice(to);
                rewritten.extend_from_slice(&w[pos + from.len()..]);
                let other = self.intern(rewritten);
                self.union(id, other);
            }
        }
    }

    fn normal_form(&mut self, id: usize) -> Word {
        let root = self.find(id);
        self.least[root].clone()
    }

    /// Widens the rewrite frontier and re-opens every word for closure.
    fn raise_bound(&mut self) {
        self.bound += 1;
        self.processed.iter_mut().for_each(|p| *p = false);
        self.pending = (0..self.words.len()).collect();
    }
}

/// Enumerates the semigroup presented by `p` up to the given caps.
///
/// Discovery is demand driven: starting from the generators, the harvest
/// walks right multiplication by single generators, interning the step words
/// it needs; when verification of the harvested table fails, one round of
/// pairwise normal-form products is interned and closure re-runs. Every
/// merge performed is justified by a relation rewrite, so a table passing
/// the final certificate is the presented semigroup exactly.
pub fn enumerate_fp_semigroup(p: &Presentation, limits: &EnumLimits) -> EnumeratedSemigroup {
    assert!(p.generator_count > 0, "presentation needs at least one generator");
    for (u, v) in &p.relations {
        assert!(!u.is_empty() && !v.is_empty(), "relation words must be nonempty");
        assert!(
            u.iter().chain(v).all(|&g| g < p.generator_count),
            "relation letter out of range"
        );
    }
    let longest_side = p.relations.iter().map(|(u, v)| u.len().max(v.len())).max().unwrap_or(1);
    let mut cong = Congruence {
        ids: BTreeMap::new(),
        words: Vec::new(),
        parent: Vec::new(),
        least: Vec::new(),
        max_word_len: limits.max_word_len,
        bound: (longest_side + 2).min(limits.max_word_len),
        relations: p.relations.clone(),
        pending: Vec::new(),
        processed: Vec::new(),
    };
    let cap_exceeded = || EnumeratedSemigroup {
        elements: Vec::new(),
        table: Vec::new(),
        gen_map: Vec::new(),
        status: EnumStatus::CapExceeded,
    };

    let gen_ids: Vec<usize> = (0..p.generator_count).map(|g| cong.intern(vec![g])).collect();
    cong.close();

    // word budget: generous but finite, so pathological presentations stop
    let word_budget = 64 * limits.max_elements.max(1024);

    loop {
        // harvest: reachability closure over step words nf(x)·g
        let mut roots: Vec<usize> = Vec::new();
        let mut root_index: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue: Vec<usize> = Vec::new();
        let mut grew = false;
        for &g in &gen_ids {
            let r = cong.find(g);
            if let std::collections::btree_map::Entry::Vacant(e) = root_index.entry(r) {
                e.insert(roots.len());
                roots.push(r);
                queue.push(r);
            }
        }
        let mut overflow = false;
        while let Some(r) = queue.pop() {
            let nf = cong.normal_form(r);
            for g in 0..p.generator_count {
                if nf.len() + 1 > limits.max_word_len {
                    overflow = true;
                    continue;
                }
                let mut step = nf.clone();
                step.push(g);
                let known = cong.ids.contains_key(&step);
                let id = cong.intern(step);
                if !known {
                    grew = true;
                }
                cong.close();
                let root = cong.find(id);
                if let std::collections::btree_map::Entry::Vacant(e) = root_index.entry(root) {
                    e.insert(roots.len());
                    roots.push(root);
                    queue.push(root);
                    if roots.len() > limits.max_elements {
                        return cap_exceeded();
                    }
                }
            }
        }
        if overflow || cong.words.len() > word_budget {
            return cap_exceeded();
        }
        if grew {
            // roots may have merged or split indices; recompute from scratch
            continue;
        }

        // closure may have merged roots discovered earlier; canonicalize
        let mut class_roots: BTreeSet<usize> = BTreeSet::new();
        for &r in &roots {
            class_roots.insert(cong.find(r));
        }
        let mut elements: Vec<(usize, Word)> =
            class_roots.iter().map(|&r| (r, cong.normal_form(r))).collect();
        elements.sort_by_key(|(_, w)| llex(w));
        let index_of_root: BTreeMap<usize, usize> =
            elements.iter().enumerate().map(|(i, (r, _))| (*r, i)).collect();
        let n = elements.len();

        // single-generator steps; all step words exist after the loop above
        let mut step = vec![0usize; n * p.generator_count];
        let mut missing = false;
        for (i, (_, nf)) in elements.iter().enumerate() {
            for g in 0..p.generator_count {
                let mut w = nf.clone();
                w.push(g);
                match cong.ids.get(&w) {
                    Some(&id) => {
                        let root = cong.find(id);
                        match index_of_root.get(&root) {
                            Some(&k) => step[i * p.generator_count + g] = k,
                            None => {
                                missing = true;
                            }
                        }
                    }
                    None => {
                        missing = true;
                    }
                }
            }
        }
        if missing {
            continue; // new classes appeared; rerun the reachability pass
        }

        // fold products through normal forms
        let fold = |step: &[usize], start: usize, word: &[usize]| {
            let mut acc = start;
            for &g in word {
                acc = step[acc * p.generator_count + g];
            }
            acc
        };
        let mut table = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = fold(&step, x, &elements[y].1);
            }
        }
        let gen_map: Vec<usize> =
            gen_ids.iter().map(|&g| index_of_root[&cong.find(g)]).collect();

        // certificate: single-letter compatibility, relations, reachability.
        // Compatibility t(x,y)·g = t(x, y·g) extends by induction over the
        // letters of a normal form to full associativity.
        let mut certified = true;
        'cert: for x in 0..n {
            for y in 0..n {
                for g in 0..p.generator_count {
                    let lhs = step[table[x * n + y] * p.generator_count + g];
                    let rhs = table[x * n + step[y * p.generator_count + g]];
                    if lhs != rhs {
                        certified = false;
                        break 'cert;
                    }
                }
            }
        }
        let eval = |word: &Word| fold(&step, gen_map[word[0]], &word[1..]);
        if certified {
            for (u, v) in &p.relations {
                if eval(u) != eval(v) {
                    certified = false;
                    break;
                }
            }
        }

        if certified {
            return EnumeratedSemigroup {
                elements: elements.into_iter().map(|(_, w)| w).collect(),
                table,
                gen_map,
                status: EnumStatus::Complete,
            };
        }

        // not yet converged: one round of pairwise normal-form products,
        // then a wider rewrite frontier once even that is exhausted
        let mut added = false;
        let nfs: Vec<Word> = elements.iter().map(|(_, w)| w.clone()).collect();
        for a in &nfs {
            for b in &nfs {
                if a.len() + b.len() <= limits.max_word_len {
                    let mut w = a.clone();
                    w.extend_from_slice(b);
                    if !cong.ids.contains_key(&w) {
                        cong.intern(w);
                        added = true;
                    }
                }
            }
        }
        cong.close();
        if !added {
            if cong.bound < limits.max_word_len {
                cong.raise_bound();
                cong.close();
            } else {
                // nothing left to try within the caps
                return cap_exceeded();
            }
        }
        if cong.words.len() > word_budget {
            return cap_exceeded();
        }
    }
}

/// The semigroup algebra of the enumerated expansion, with the canonical
/// generator embedding `ι(s) = [s]` as basis vectors.
#[derive(Clone, Debug)]
pub struct ParAlgebra {
    pub base: EnumeratedSemigroup,
    pub algebra: Arc<StructureAlgebra>,
    pub iota: Vec<usize>,
}

impl ParAlgebra {
    /// The canonical map `s ↦ [s]` as a partial representation.
    pub fn iota_rep(&self, sg: Arc<InverseSemigroup>) -> Result<PartialRep, RepError> {
        let assignment =
            self.iota.iter().map(|&e| self.algebra.basis_vector(e)).collect::<Vec<_>>();
        PartialRep::new(sg, self.algebra.clone(), assignment)
    }
}

/// Enumerates the expansion of `sg` and forms its semigroup algebra.
pub fn kpar(sg: &InverseSemigroup, limits: &EnumLimits) -> Result<ParAlgebra, ExpansionError> {
    let presentation = pr_presentation(sg);
    let base = enumerate_fp_semigroup(&presentation, limits);
    if base.status != EnumStatus::Complete {
        return Err(ExpansionError::CapExceeded {
            max_elements: limits.max_elements,
            max_word_len: limits.max_word_len,
        });
    }
    let n = base.size();
    let mut constants = vec![vzero(n); n * n];
    for a in 0..n {
        for b in 0..n {
            let mut v = vzero(n);
            v[base.mul(a, b)] = num_traits::One::one();
            constants[a * n + b] = v;
        }
    }
    let mut algebra = StructureAlgebra::from_constants(n, constants, None)
        .expect("semigroup algebra shape")
        .with_assoc_checked();
    if let Some(u) = algebra.solve_unit() {
        algebra = algebra.with_unit(u).expect("solved unit");
    }
    let iota = base.gen_map.clone();
    Ok(ParAlgebra { base, algebra: Arc::new(algebra), iota })
}

/// The universal extension of a partial representation along `ι`: each
/// expansion element (a normal-form word) maps to the product of `π` over
/// its letters, extended linearly. Returns the matrix together with the
/// verification report (relations map to equalities, the extension is
/// multiplicative, and it restricts to `π` on the generators).
pub fn extend_rep(
    pa: &ParAlgebra,
    sg: &InverseSemigroup,
    rep: &PartialRep,
) -> Result<(Mat, AxiomReport), RepError> {
    let b = rep.target();
    let mut report = AxiomReport::new();

    // relations must already hold in the target
    let presentation = pr_presentation(sg);
    let eval = |word: &Word| {
        let mut acc = rep.of(word[0]).to_vec();
        for &g in &word[1..] {
            acc = b.mul(&acc, rep.of(g));
        }
        acc
    };
    let broken = presentation.relations.iter().position(|(u, v)| eval(u) != eval(v));
    report.record("relations map to equalities", broken.is_none(), || {
        let (u, v) = &presentation.relations[broken.unwrap()];
        format!("{:?} = {:?} fails in the target", u, v)
    });
    if let Some(ix) = broken {
        let (u, v) = &presentation.relations[ix];
        return Err(RepError::InvalidRep(format!(
            "relation {:?} = {:?} fails in the target",
            u, v
        )));
    }

    let mut psi = Mat::zeros(b.dim(), pa.base.size());
    for (e, word) in pa.base.elements.iter().enumerate() {
        let image = eval(word);
        for (r, value) in image.into_iter().enumerate() {
            psi.set(r, e, value);
        }
    }

    let hom = crate::algebra::verify_linear_hom(&pa.algebra, b, &psi)?;
    report.record("extension multiplicative", hom.is_hom(), || {
        format!("basis pair {:?}", hom.multiplicative_witness.unwrap())
    });
    let mut restricts = None;
    for s in sg.elements() {
        if psi.apply(&pa.algebra.basis_vector(pa.iota[s])) != rep.of(s) {
            restricts = Some(s);
            break;
        }
    }
    report.record("restricts to the representation", restricts.is_none(), || {
        format!("s = {}", restricts.unwrap())
    });
    Ok((psi, report))
}

/// Everything the isomorphism pipeline produces, dimensions and verdicts.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub expansion_size: usize,
    pub kpar_dim: usize,
    pub relation_ideal_dim: usize,
    pub quotient_dim: usize,
    pub subalgebra_dim: usize,
    pub carrier_dims: Vec<usize>,
    pub formal_dim: usize,
    pub crossed_ideal_dim: usize,
    pub crossed_dim: usize,
    pub checks: AxiomReport,
}

impl PipelineReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}

/// Runs the full comparison chain for one inverse semigroup: form the
/// expansion algebra, quotient by the order ideal, derive the partial action
/// of the quotient representation, build its crossed product, and verify
/// that the comparison maps `φ` and `ψ` are mutually inverse isomorphisms.
pub fn theorem_2_7_pipeline(
    sg: &Arc<InverseSemigroup>,
    limits: &EnumLimits,
) -> Result<PipelineReport, ExpansionError> {
    let pa = kpar(sg, limits)?;
    let iota = pa.iota_rep(sg.clone())?;
    let rq: RepQuotient = rep_quotient(&iota)?;
    let derived = action_from_rep(&rq.pi_tilde)?;
    let crossed = CrossedProduct::build(&derived.action).map_err(RepError::from)?;
    let pi_alpha = induced_rep(&crossed)?;
    let (phi, phi_report) = phi_hom(&rq, &derived, &crossed)?;

    let mut checks = phi_report;

    // ψ on the whole expansion algebra, then descended to the quotient
    let (psi_full, psi_report) = extend_rep(&pa, sg, &pi_alpha)?;
    checks.merge(psi_report);

    let vanishes = rq.ideal.basis().iter().position(|g| !vis_zero(&psi_full.apply(g)));
    checks.record("ψ vanishes on the order ideal", vanishes.is_none(), || {
        format!("ideal basis vector {}", vanishes.unwrap())
    });
    if let Some(ix) = vanishes {
        return Err(ExpansionError::Rep(RepError::WellDefinednessBreach(format!(
            "ψ does not kill order-ideal vector {}",
            ix
        ))));
    }
    let reps = rq.ideal.complement_columns();
    let mut psi = Mat::zeros(crossed.quotient().dim(), reps.len());
    for (k, &col) in reps.iter().enumerate() {
        for r in 0..crossed.quotient().dim() {
            psi.set(r, k, psi_full.get(r, col).clone());
        }
    }

    // ψ(class of [s]) is the coset of ε̃_s δ_s
    let mut psi_formula = None;
    for s in sg.elements() {
        let iota_class = rq.projection.apply(&pa.algebra.basis_vector(pa.iota[s]));
        let lhs = psi.apply(&iota_class);
        if lhs != pi_alpha.of(s) {
            psi_formula = Some(s);
            break;
        }
    }
    checks.record("ψ([s]) = ε̃_s δ_s", psi_formula.is_none(), || {
        format!("s = {}", psi_formula.unwrap())
    });

    let dims_match = crossed.quotient().dim() == rq.quotient.dim();
    checks.record("dim(A×S) = dim(K_par/J)", dims_match, || {
        format!("{} vs {}", crossed.quotient().dim(), rq.quotient.dim())
    });

    let phi_psi = phi.mul(&psi);
    checks.record("φ∘ψ fixes every basis element", phi_psi.is_identity(), || {
        first_moved_basis(&phi_psi)
    });
    let psi_phi = psi.mul(&phi);
    checks.record("ψ∘φ fixes every basis element", psi_phi.is_identity(), || {
        first_moved_basis(&psi_phi)
    });

    // bookkeeping: dim L = Σ_s dim X_s and dim(A×S) = dim L − dim I
    let carrier_dims: Vec<usize> =
        sg.elements().map(|s| derived.action.ideal(s).dim()).collect();
    let formal_dim = crossed.formal_algebra().dim();
    let sum_ok = carrier_dims.iter().sum::<usize>() == formal_dim
        && formal_dim - crossed.relation_ideal().dim() == crossed.quotient().dim();
    checks.record("dimension bookkeeping", sum_ok, || "block dimensions inconsistent".into());

    Ok(PipelineReport {
        expansion_size: pa.base.size(),
        kpar_dim: pa.algebra.dim(),
        relation_ideal_dim: rq.ideal.dim(),
        quotient_dim: rq.quotient.dim(),
        subalgebra_dim: derived.action.algebra().dim(),
        carrier_dims,
        formal_dim,
        crossed_ideal_dim: crossed.relation_ideal().dim(),
        crossed_dim: crossed.quotient().dim(),
        checks,
    })
}

fn first_moved_basis(m: &Mat) -> String {
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            let expect_one = i == j;
            let v = m.get(i, j);
            if (expect_one && !num_traits::One::is_one(v))
                || (!expect_one && !num_traits::Zero::is_zero(v))
            {
                return format!("basis element {} is moved", j);
            }
        }
    }
    "shape mismatch".into()
}
