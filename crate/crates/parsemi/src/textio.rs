//! Plain-text instance formats and strict parsers.
//!
//! Four file kinds exist. Blank lines and `#` comments are allowed anywhere;
//! any other unrecognized line is an error.
//!
//! Semigroup (`.sg`): `n <size>`, an optional `unit <idx>`, then `size` rows
//! of `size` element indices. The inverse map is always recomputed from the
//! table, never read.
//!
//! Algebra (`.alg`): `dim <d>`, an optional `unit <d rationals>`, then
//! sparse lines `i j k p/q` stating that the `k`-coordinate of `e_i·e_j` is
//! `p/q`; omitted entries are zero.
//!
//! Action (`.act`): `semigroup <path>` and `algebra <path>` references
//! (relative to the action file), then per element `ideal s: v1 ; v2 ; …`
//! and `map s: row1 ; row2 ; …`. The map matrix is written relative to the
//! bases exactly as listed in the file; elements without lines carry the
//! zero ideal and the empty map.
//!
//! Representation (`.rep`): the same two references, then one
//! `rep s: <coordinate vector>` line per element (all elements required).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::action::PartialAction;
use crate::algebra::StructureAlgebra;
use crate::linalg::{vzero, Mat};
use crate::rep::PartialRep;
use crate::scalar::{format_rat, parse_rat, Rat};
use crate::semigroup::InverseSemigroup;
use crate::subspace::Subspace;

#[derive(Debug, Error)]
pub enum TextError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("inconsistent instance: {0}")]
    Consistency(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn perr(line: usize, msg: impl Into<String>) -> TextError {
    TextError::Parse { line, msg: msg.into() }
}

/// Content lines with original 1-based line numbers; comments and blank
/// lines stripped.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// Shape-checked table data: size, rows, declared unit.
pub type RawTable = (usize, Vec<Vec<usize>>, Option<usize>);

pub fn parse_semigroup(text: &str) -> Result<InverseSemigroup, TextError> {
    let (_, rows, unit) = parse_semigroup_table(text)?;
    InverseSemigroup::from_table(&rows, unit).map_err(|e| TextError::Consistency(e.to_string()))
}

/// Raw table parse: shape checks only, no axiom validation. Lets callers
/// report axiom failures as check content rather than hard errors.
pub fn parse_semigroup_table(text: &str) -> Result<RawTable, TextError> {
    let lines = content_lines(text);
    let mut iter = lines.iter();
    let (ln, first) = iter.next().ok_or_else(|| perr(0, "empty file"))?;
    let size: usize = match first.strip_prefix("n ") {
        Some(rest) => rest.trim().parse().map_err(|_| perr(*ln, "bad size"))?,
        None => return Err(perr(*ln, "expected `n <size>`")),
    };
    if size == 0 {
        return Err(perr(*ln, "size must be positive"));
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut unit = None;
    for (ln, line) in iter {
        if let Some(rest) = line.strip_prefix("unit ") {
            if unit.is_some() || !rows.is_empty() {
                return Err(perr(*ln, "unit line must appear once, before the table"));
            }
            unit = Some(rest.trim().parse().map_err(|_| perr(*ln, "bad unit index"))?);
            continue;
        }
        let row: Result<Vec<usize>, _> =
            line.split_whitespace().map(str::parse::<usize>).collect();
        let row = row.map_err(|_| perr(*ln, "expected a row of element indices"))?;
        if row.len() != size {
            return Err(perr(*ln, format!("row has {} entries, expected {}", row.len(), size)));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= size) {
            return Err(perr(*ln, format!("entry {} out of range (size {})", bad, size)));
        }
        if rows.len() == size {
            return Err(perr(*ln, "more rows than declared size"));
        }
        rows.push(row);
    }
    if rows.len() != size {
        return Err(TextError::Consistency(format!(
            "expected {} table rows, found {}",
            size,
            rows.len()
        )));
    }
    if let Some(u) = unit {
        if u >= size {
            return Err(TextError::Consistency(format!("unit index {} out of range", u)));
        }
    }
    Ok((size, rows, unit))
}

pub fn semigroup_to_text(sg: &InverseSemigroup) -> String {
    let mut out = format!("n {}\n", sg.size());
    if let Some(u) = sg.unit() {
        out.push_str(&format!("unit {}\n", u));
    }
    for s in sg.elements() {
        let row: Vec<String> = sg.elements().map(|t| sg.mul(s, t).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_algebra(text: &str) -> Result<StructureAlgebra, TextError> {
    let lines = content_lines(text);
    let mut iter = lines.iter();
    let (ln, first) = iter.next().ok_or_else(|| perr(0, "empty file"))?;
    let dim: usize = match first.strip_prefix("dim ") {
        Some(rest) => rest.trim().parse().map_err(|_| perr(*ln, "bad dimension"))?,
        None => return Err(perr(*ln, "expected `dim <d>`")),
    };
    let mut unit: Option<Vec<Rat>> = None;
    let mut constants = vec![vzero(dim); dim * dim];
    let mut seen: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (ln, line) in iter {
        if let Some(rest) = line.strip_prefix("unit ") {
            if unit.is_some() {
                return Err(perr(*ln, "duplicate unit line"));
            }
            let parsed: Option<Vec<Rat>> = rest.split_whitespace().map(parse_rat).collect();
            let u = parsed.ok_or_else(|| perr(*ln, "bad rational in unit"))?;
            if u.len() != dim {
                return Err(perr(*ln, format!("unit has {} entries, expected {}", u.len(), dim)));
            }
            unit = Some(u);
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 4 {
            return Err(perr(*ln, "expected `i j k value`"));
        }
        let parse_idx = |t: &str| -> Result<usize, TextError> {
            let v: usize = t.parse().map_err(|_| perr(*ln, "bad index"))?;
            if v >= dim {
                return Err(perr(*ln, format!("index {} out of range (dim {})", v, dim)));
            }
            Ok(v)
        };
        let (i, j, k) = (parse_idx(tokens[0])?, parse_idx(tokens[1])?, parse_idx(tokens[2])?);
        let value = parse_rat(tokens[3]).ok_or_else(|| perr(*ln, "bad rational value"))?;
        if let Some(prev) = seen.insert((i, j, k), *ln) {
            return Err(perr(*ln, format!("duplicate entry ({i}, {j}, {k}), first at line {prev}")));
        }
        constants[i * dim + j][k] = value;
    }
    StructureAlgebra::from_constants(dim, constants, unit)
        .map_err(|e| TextError::Consistency(e.to_string()))
}

pub fn algebra_to_text(algebra: &StructureAlgebra) -> String {
    let mut out = format!("dim {}\n", algebra.dim());
    if let Some(u) = algebra.unit() {
        let entries: Vec<String> = u.iter().map(format_rat).collect();
        out.push_str(&format!("unit {}\n", entries.join(" ")));
    }
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            for (k, v) in algebra.basis_product(i, j).iter().enumerate() {
                if !v.is_zero() {
                    out.push_str(&format!("{} {} {} {}\n", i, j, k, format_rat(v)));
                }
            }
        }
    }
    out
}

fn read_file(path: &Path) -> Result<String, TextError> {
    std::fs::read_to_string(path)
        .map_err(|source| TextError::Io { path: path.to_path_buf(), source })
}

pub fn load_semigroup(path: &Path) -> Result<Arc<InverseSemigroup>, TextError> {
    Ok(Arc::new(parse_semigroup(&read_file(path)?)?))
}

pub fn load_algebra(path: &Path) -> Result<Arc<StructureAlgebra>, TextError> {
    Ok(Arc::new(parse_algebra(&read_file(path)?)?))
}

/// The two file references shared by action and representation files.
fn parse_references<'a>(
    lines: &mut std::iter::Peekable<std::slice::Iter<'a, (usize, &'a str)>>,
    base_dir: &Path,
) -> Result<(Arc<InverseSemigroup>, Arc<StructureAlgebra>), TextError> {
    let (ln, line) = lines.next().ok_or_else(|| perr(0, "empty file"))?;
    let sg_path = line
        .strip_prefix("semigroup ")
        .ok_or_else(|| perr(*ln, "expected `semigroup <path>`"))?;
    let (ln2, line2) = lines.next().ok_or_else(|| perr(*ln, "missing `algebra <path>`"))?;
    let alg_path = line2
        .strip_prefix("algebra ")
        .ok_or_else(|| perr(*ln2, "expected `algebra <path>`"))?;
    let sg = load_semigroup(&base_dir.join(sg_path.trim()))?;
    let algebra = load_algebra(&base_dir.join(alg_path.trim()))?;
    Ok((sg, algebra))
}

fn parse_vectors(ln: usize, text: &str, dim: usize) -> Result<Vec<Vec<Rat>>, TextError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|chunk| {
            let parsed: Option<Vec<Rat>> = chunk.split_whitespace().map(parse_rat).collect();
            let v = parsed.ok_or_else(|| perr(ln, "bad rational"))?;
            if v.len() != dim {
                return Err(perr(ln, format!("vector has {} entries, expected {}", v.len(), dim)));
            }
            Ok(v)
        })
        .collect()
}

/// Loads an action file, resolving its semigroup and algebra references
/// relative to the file's directory and re-coordinating the written map
/// matrices onto the canonical echelon bases.
pub fn load_action(path: &Path) -> Result<PartialAction, TextError> {
    let text = read_file(path)?;
    let base_dir = path.parent().unwrap_or(Path::new("."));
    let lines = content_lines(&text);
    let mut iter = lines.iter().peekable();
    let (sg, algebra) = parse_references(&mut iter, base_dir)?;
    let n = sg.size();
    let dim = algebra.dim();

    let mut file_bases: Vec<Option<(usize, Vec<Vec<Rat>>)>> = vec![None; n];
    let mut file_maps: Vec<Option<(usize, Vec<Vec<Rat>>)>> = vec![None; n];
    for (ln, line) in iter {
        let (kind, rest) = if let Some(rest) = line.strip_prefix("ideal ") {
            ("ideal", rest)
        } else if let Some(rest) = line.strip_prefix("map ") {
            ("map", rest)
        } else {
            return Err(perr(*ln, "expected `ideal s: …` or `map s: …`"));
        };
        let (elt, payload) =
            rest.split_once(':').ok_or_else(|| perr(*ln, "missing `:` separator"))?;
        let s: usize = elt.trim().parse().map_err(|_| perr(*ln, "bad element index"))?;
        if s >= n {
            return Err(perr(*ln, format!("element {} out of range (size {})", s, n)));
        }
        if kind == "ideal" {
            if file_bases[s].is_some() {
                return Err(perr(*ln, format!("duplicate ideal line for element {}", s)));
            }
            file_bases[s] = Some((*ln, parse_vectors(*ln, payload, dim)?));
        } else {
            if file_maps[s].is_some() {
                return Err(perr(*ln, format!("duplicate map line for element {}", s)));
            }
            // row lengths are checked once both bases are known
            let text = payload.trim();
            let rows = if text.is_empty() {
                Vec::new()
            } else {
                text.split(';')
                    .map(|chunk| {
                        let parsed: Option<Vec<Rat>> =
                            chunk.split_whitespace().map(parse_rat).collect();
                        parsed.ok_or_else(|| perr(*ln, "bad rational"))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            file_maps[s] = Some((*ln, rows));
        }
    }

    // canonical subspaces, with independence checks on the written bases
    let mut ideals = Vec::with_capacity(n);
    for (s, entry) in file_bases.iter().enumerate() {
        let rows = entry.as_ref().map(|(_, v)| v.clone()).unwrap_or_default();
        let space = Subspace::span(dim, &rows);
        if space.dim() != rows.len() {
            return Err(TextError::Consistency(format!(
                "ideal basis for element {} is linearly dependent",
                s
            )));
        }
        ideals.push(space);
    }

    // re-coordinate each map from the file bases to the canonical ones
    let mut maps = Vec::with_capacity(n);
    for s in 0..n {
        let star = sg.inv(s);
        let dom_rows = file_bases[star].as_ref().map(|(_, v)| v.clone()).unwrap_or_default();
        let cod_rows = file_bases[s].as_ref().map(|(_, v)| v.clone()).unwrap_or_default();
        let rows = file_maps[s].as_ref().map(|(_, v)| v.clone()).unwrap_or_default();
        if rows.len() != cod_rows.len() || rows.iter().any(|r| r.len() != dom_rows.len()) {
            return Err(TextError::Consistency(format!(
                "map for element {} must be {}x{} in the written bases",
                s,
                cod_rows.len(),
                dom_rows.len()
            )));
        }
        let file_matrix = if rows.is_empty() {
            Mat::zeros(cod_rows.len(), dom_rows.len())
        } else {
            Mat::from_rows(rows)
        };
        // canonical domain basis vector -> file coordinates -> image
        let dom_file = Mat::from_rows(dom_rows.clone());
        let mut canonical = Mat::zeros(ideals[s].dim(), ideals[star].dim());
        for (j, e) in ideals[star].basis().iter().enumerate() {
            let file_coords = dom_file
                .transpose()
                .solve(e)
                .ok_or_else(|| TextError::Consistency(format!(
                    "ideal bases for elements {} and {} span different spaces",
                    star, s
                )))?;
            let image_file = file_matrix.apply(&file_coords);
            let mut ambient = vzero(dim);
            for (c, row) in image_file.iter().zip(&cod_rows) {
                crate::linalg::vaxpy(&mut ambient, c, row);
            }
            let coords = ideals[s].coords_of(&ambient).ok_or_else(|| {
                TextError::Consistency(format!("map image for element {} escapes its ideal", s))
            })?;
            for (i, v) in coords.into_iter().enumerate() {
                canonical.set(i, j, v);
            }
        }
        maps.push(canonical);
    }

    PartialAction::new(sg, algebra, ideals, maps)
        .map_err(|e| TextError::Consistency(e.to_string()))
}

/// Loads a representation file; every element must carry a `rep` line.
pub fn load_rep(path: &Path) -> Result<PartialRep, TextError> {
    let text = read_file(path)?;
    let base_dir = path.parent().unwrap_or(Path::new("."));
    let lines = content_lines(&text);
    let mut iter = lines.iter().peekable();
    let (sg, algebra) = parse_references(&mut iter, base_dir)?;
    let n = sg.size();
    let dim = algebra.dim();
    let mut assignment: Vec<Option<Vec<Rat>>> = vec![None; n];
    for (ln, line) in iter {
        let rest = line.strip_prefix("rep ").ok_or_else(|| perr(*ln, "expected `rep s: …`"))?;
        let (elt, payload) =
            rest.split_once(':').ok_or_else(|| perr(*ln, "missing `:` separator"))?;
        let s: usize = elt.trim().parse().map_err(|_| perr(*ln, "bad element index"))?;
        if s >= n {
            return Err(perr(*ln, format!("element {} out of range (size {})", s, n)));
        }
        if assignment[s].is_some() {
            return Err(perr(*ln, format!("duplicate rep line for element {}", s)));
        }
        let parsed: Option<Vec<Rat>> = payload.split_whitespace().map(parse_rat).collect();
        let v = parsed.ok_or_else(|| perr(*ln, "bad rational"))?;
        if v.len() != dim {
            return Err(perr(*ln, format!("vector has {} entries, expected {}", v.len(), dim)));
        }
        assignment[s] = Some(v);
    }
    let missing: Vec<usize> =
        (0..n).filter(|&s| assignment[s].is_none()).collect();
    if !missing.is_empty() {
        return Err(TextError::Consistency(format!("missing rep lines for elements {:?}", missing)));
    }
    PartialRep::new(sg, algebra, assignment.into_iter().map(Option::unwrap).collect())
        .map_err(|e| TextError::Consistency(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn semigroup_round_trip() {
        for sg in [
            InverseSemigroup::cyclic_group(3),
            InverseSemigroup::chain_semilattice(2),
            InverseSemigroup::symmetric_inverse_monoid(2),
        ] {
            let text = semigroup_to_text(&sg);
            let parsed = parse_semigroup(&text).unwrap();
            assert_eq!(parsed, sg);
        }
    }

    #[test]
    fn semigroup_parse_errors() {
        assert!(matches!(parse_semigroup(""), Err(TextError::Parse { .. })));
        let bad = "n 2\n0 1\n1 2\n"; // out-of-range entry
        match parse_semigroup(bad) {
            Err(TextError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let left_zero = "n 2\n0 0\n1 1\n";
        assert!(matches!(parse_semigroup(left_zero), Err(TextError::Consistency(_))));
        let unknown = "n 1\nfoo bar\n0\n";
        assert!(matches!(parse_semigroup(unknown), Err(TextError::Parse { .. })));
    }

    #[test]
    fn algebra_round_trip() {
        for alg in [
            StructureAlgebra::field(),
            StructureAlgebra::dual_numbers(),
            StructureAlgebra::matrix_algebra(2),
            StructureAlgebra::zero_product(2),
        ] {
            let text = algebra_to_text(&alg);
            let parsed = parse_algebra(&text).unwrap();
            assert_eq!(parsed.dim(), alg.dim());
            assert_eq!(parsed.unit(), alg.unit());
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    assert_eq!(parsed.basis_product(i, j), alg.basis_product(i, j));
                }
            }
        }
    }

    #[test]
    fn algebra_parse_errors() {
        assert!(matches!(parse_algebra("dim 1\n0 0 0 1/0\n"), Err(TextError::Parse { .. })));
        assert!(matches!(parse_algebra("dim 1\n0 0 1 1\n"), Err(TextError::Parse { .. })));
        assert!(matches!(
            parse_algebra("dim 1\n0 0 0 1\n0 0 0 2\n"),
            Err(TextError::Parse { .. })
        ));
        // a wrong unit is caught by construction
        assert!(matches!(
            parse_algebra("dim 1\nunit 2\n0 0 0 1\n"),
            Err(TextError::Consistency(_))
        ));
    }

    #[test]
    fn action_file_round_trip() {
        let dir = std::env::temp_dir().join(format!("parsemi-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(
            dir.join("z2.sg"),
            semigroup_to_text(&InverseSemigroup::cyclic_group(2)),
        )
        .unwrap();
        std::fs::write(dir.join("f2.alg"), algebra_to_text(&StructureAlgebra::product_of_fields(2)))
            .unwrap();
        // trivial action written with a non-echelon basis for X_g
        let action_text = "semigroup z2.sg\nalgebra f2.alg\n\
             ideal 0: 1 0 ; 0 1\nmap 0: 1 0 ; 0 1\n\
             ideal 1: 1 1 ; 1 -1\nmap 1: 1 0 ; 0 1\n";
        std::fs::write(dir.join("t.act"), action_text).unwrap();
        let action = load_action(&dir.join("t.act")).unwrap();
        let report = action.verify();
        assert!(report.passed(), "{:?}", report.failures().next());
        assert!(action.ideal(1).is_full());
        assert!(action.map(1).is_identity());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn action_consistency_errors() {
        let dir = std::env::temp_dir().join(format!("parsemi-io2-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(
            dir.join("z2.sg"),
            semigroup_to_text(&InverseSemigroup::cyclic_group(2)),
        )
        .unwrap();
        std::fs::write(dir.join("f.alg"), algebra_to_text(&StructureAlgebra::field())).unwrap();
        // map shape does not match the ideal bases
        let bad = "semigroup z2.sg\nalgebra f.alg\nideal 0: 1\nmap 0: 1 0\nideal 1: 1\nmap 1: 1\n";
        std::fs::write(dir.join("bad.act"), bad).unwrap();
        assert!(matches!(load_action(&dir.join("bad.act")), Err(TextError::Consistency(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn rep_file_load() {
        let dir = std::env::temp_dir().join(format!("parsemi-io3-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(
            dir.join("z2.sg"),
            semigroup_to_text(&InverseSemigroup::cyclic_group(2)),
        )
        .unwrap();
        std::fs::write(dir.join("m2.alg"), algebra_to_text(&StructureAlgebra::matrix_algebra(2)))
            .unwrap();
        let rep_text = "semigroup z2.sg\nalgebra m2.alg\nrep 0: 1 0 0 1\nrep 1: 0 1 1 0\n";
        std::fs::write(dir.join("swap.rep"), rep_text).unwrap();
        let rep = load_rep(&dir.join("swap.rep")).unwrap();
        assert!(rep.verify().unwrap().passed());
        assert_eq!(rep.of(1)[1], rat(1));

        let missing = "semigroup z2.sg\nalgebra m2.alg\nrep 0: 1 0 0 1\n";
        std::fs::write(dir.join("missing.rep"), missing).unwrap();
        assert!(matches!(load_rep(&dir.join("missing.rep")), Err(TextError::Consistency(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
