//! Finite inverse semigroups presented by Cayley tables.
//!
//! Elements are dense indices `0..size`, and the multiplication table is the
//! single source of truth; inverses, idempotents and the natural partial
//! order are all derived from it. Axiom checks are exhaustive, which is
//! cheap at the sizes this crate targets.

use thiserror::Error;

use crate::report::AxiomReport;

#[derive(Debug, Error)]
pub enum SemigroupError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not an inverse semigroup: {axiom} fails, witness {witness}")]
    NotInverseSemigroup { axiom: String, witness: String },
    #[error("element {index} out of range (size {size})")]
    OutOfRange { index: usize, size: usize },
}

/// A finite inverse semigroup, optionally unital.
///
/// Immutable after construction; every constructor validates the full axiom
/// set, so a value of this type always satisfies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSemigroup {
    size: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    unit: Option<usize>,
}

impl InverseSemigroup {
    /// Validates an explicit Cayley table and derives the inverse map.
    pub fn from_table(table: &[Vec<usize>], unit: Option<usize>) -> Result<Self, SemigroupError> {
        let size = table.len();
        if size == 0 {
            return Err(SemigroupError::MalformedTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(SemigroupError::MalformedTable(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    size
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(SemigroupError::MalformedTable(format!(
                        "entry ({}, {}) = {} out of range",
                        i, j, v
                    )));
                }
            }
        }
        if let Some(u) = unit {
            if u >= size {
                return Err(SemigroupError::OutOfRange { index: u, size });
            }
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let report = verify_table(size, &flat, unit);
        if let Some(failure) = report.failures().next() {
            return Err(SemigroupError::NotInverseSemigroup {
                axiom: failure.name.clone(),
                witness: failure.witness.clone().unwrap_or_default(),
            });
        }
        let inv = (0..size)
            .map(|s| {
                (0..size)
                    .find(|&t| {
                        flat[flat[s * size + t] * size + s] == s
                            && flat[flat[t * size + s] * size + t] == t
                    })
                    .expect("verified table has inverses")
            })
            .collect();
        Ok(InverseSemigroup { size, mul: flat, inv, unit })
    }

    /// The monoid of all partial injections on `n` points.
    pub fn symmetric_inverse_monoid(n: usize) -> Self {
        assert!(n >= 1, "need at least one point");
        let maps = enumerate_partial_injections(n);
        let index_of = |m: &PartialInjection| maps.binary_search(m).expect("closed under composition");
        let table: Vec<Vec<usize>> = maps
            .iter()
            .map(|s| maps.iter().map(|t| index_of(&compose(s, t))).collect())
            .collect();
        let identity: PartialInjection = (0..n).map(Some).collect();
        let unit = index_of(&identity);
        Self::from_table(&table, Some(unit)).expect("partial injections form an inverse monoid")
    }

    /// The cyclic group of order `n`, with the identity at index 0.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n >= 1, "need at least one element");
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(&table, Some(0)).expect("groups are inverse semigroups")
    }

    /// The chain semilattice `0 < 1 < … < n-1` under minimum; the top is the unit.
    pub fn chain_semilattice(n: usize) -> Self {
        assert!(n >= 1, "need at least one element");
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
        Self::from_table(&table, Some(n - 1)).expect("semilattices are inverse semigroups")
    }

    /// Direct product, as an explicit table. Element `(a, b)` has index
    /// `a * other.size + b`. Unital iff both factors are.
    pub fn direct_product(&self, other: &InverseSemigroup) -> Self {
        let n = self.size * other.size;
        let idx = |a: usize, b: usize| a * other.size + b;
        let mut table = vec![vec![0; n]; n];
        for a1 in 0..self.size {
            for b1 in 0..other.size {
                for a2 in 0..self.size {
                    for b2 in 0..other.size {
                        table[idx(a1, b1)][idx(a2, b2)] =
                            idx(self.mul(a1, a2), other.mul(b1, b2));
                    }
                }
            }
        }
        let unit = match (self.unit, other.unit) {
            (Some(u), Some(v)) => Some(idx(u, v)),
            _ => None,
        };
        Self::from_table(&table, unit).expect("product of inverse semigroups")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size
    }

    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.mul[s * self.size + t]
    }

    /// The unique `t` with `sts = s` and `tst = t`.
    pub fn inv(&self, s: usize) -> usize {
        self.inv[s]
    }

    pub fn checked_inv(&self, s: usize) -> Result<usize, SemigroupError> {
        if s >= self.size {
            return Err(SemigroupError::OutOfRange { index: s, size: self.size });
        }
        Ok(self.inv[s])
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    /// Natural partial order: `r ≤ t` iff `r = r·r*·t`.
    pub fn natural_leq(&self, r: usize, t: usize) -> bool {
        assert!(r < self.size && t < self.size, "element out of range");
        self.mul(self.mul(r, self.inv(r)), t) == r
    }

    /// All ordered pairs `(r, t)` with `r ≤ t` and `r ≠ t`.
    pub fn strict_order_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for r in 0..self.size {
            for t in 0..self.size {
                if r != t && self.natural_leq(r, t) {
                    pairs.push((r, t));
                }
            }
        }
        pairs
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&s| self.mul(s, s) == s).collect()
    }

    /// Re-runs the full axiom report for this instance.
    pub fn verify(&self) -> AxiomReport {
        verify_table(self.size, &self.mul, self.unit)
    }
}

/// Exhaustive inverse-semigroup axiom check on a flat `size × size` table.
///
/// Reports one named check per axiom with a concrete witness on failure.
/// Regularity plus commuting idempotents and uniqueness of inverses are both
/// reported; for valid input they agree.
pub fn verify_table(size: usize, mul: &[usize], unit: Option<usize>) -> AxiomReport {
    let m = |s: usize, t: usize| mul[s * size + t];
    let mut report = AxiomReport::new();

    let mut assoc_witness = None;
    'assoc: for s in 0..size {
        for t in 0..size {
            for u in 0..size {
                if m(m(s, t), u) != m(s, m(t, u)) {
                    assoc_witness = Some((s, t, u));
                    break 'assoc;
                }
            }
        }
    }
    report.record("associativity", assoc_witness.is_none(), || {
        let (s, t, u) = assoc_witness.unwrap();
        format!("(s,t,u) = ({}, {}, {})", s, t, u)
    });

    // candidate inverses per element
    let candidates: Vec<Vec<usize>> = (0..size)
        .map(|s| (0..size).filter(|&t| m(m(s, t), s) == s && m(m(t, s), t) == t).collect())
        .collect();

    let no_inverse = (0..size).find(|&s| candidates[s].is_empty());
    report.record("regularity", no_inverse.is_none(), || {
        format!("element {} has no inverse", no_inverse.unwrap())
    });

    let ambiguous = (0..size).find(|&s| candidates[s].len() > 1);
    report.record("inverse uniqueness", ambiguous.is_none(), || {
        let s = ambiguous.unwrap();
        format!("element {} has inverses {:?}", s, candidates[s])
    });

    let idempotents: Vec<usize> = (0..size).filter(|&e| m(e, e) == e).collect();
    let mut comm_witness = None;
    'comm: for &e in &idempotents {
        for &f in &idempotents {
            if m(e, f) != m(f, e) {
                comm_witness = Some((e, f));
                break 'comm;
            }
        }
    }
    report.record("idempotents commute", comm_witness.is_none(), || {
        let (e, f) = comm_witness.unwrap();
        format!("(e,f) = ({}, {})", e, f)
    });

    // involution laws, on the derived inverse when it is well defined
    if no_inverse.is_none() && ambiguous.is_none() {
        let inv: Vec<usize> = (0..size).map(|s| candidates[s][0]).collect();
        let invol = (0..size).find(|&s| inv[inv[s]] != s);
        report.record("involution", invol.is_none(), || {
            format!("inv(inv({s})) = {} != {s}", inv[inv[invol.unwrap()]], s = invol.unwrap())
        });
        let mut anti_witness = None;
        'anti: for s in 0..size {
            for t in 0..size {
                if inv[m(s, t)] != m(inv[t], inv[s]) {
                    anti_witness = Some((s, t));
                    break 'anti;
                }
            }
        }
        report.record("antihomomorphism", anti_witness.is_none(), || {
            let (s, t) = anti_witness.unwrap();
            format!("inv({s}·{t}) != inv({t})·inv({s})")
        });
    }

    if let Some(u) = unit {
        let bad = (0..size).find(|&s| m(u, s) != s || m(s, u) != s);
        report.record("unit", bad.is_none(), || {
            format!("unit {} fails on element {}", u, bad.unwrap())
        });
    }

    report
}

/// Partial injection on `0..n`, as the image vector (`None` = undefined).
type PartialInjection = Vec<Option<usize>>;

fn compose(s: &PartialInjection, t: &PartialInjection) -> PartialInjection {
    // (s ∘ t)(x) = s(t(x))
    t.iter().map(|&y| y.and_then(|y| s[y])).collect()
}

fn enumerate_partial_injections(n: usize) -> Vec<PartialInjection> {
    let mut out = Vec::new();
    let mut cur: PartialInjection = vec![None; n];
    let mut used = vec![false; n];
    fn rec(
        pos: usize,
        n: usize,
        cur: &mut PartialInjection,
        used: &mut Vec<bool>,
        out: &mut Vec<PartialInjection>,
    ) {
        if pos == n {
            out.push(cur.clone());
            return;
        }
        cur[pos] = None;
        rec(pos + 1, n, cur, used, out);
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                cur[pos] = Some(y);
                rec(pos + 1, n, cur, used, out);
                cur[pos] = None;
                used[y] = false;
            }
        }
    }
    rec(0, n, &mut cur, &mut used, &mut out);
    out.sort();
    out
}
