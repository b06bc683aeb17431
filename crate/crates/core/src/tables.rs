//! Regeneration of the reference tables, and their plain-text format.
//!
//! Files are tab-separated, one row per line; `#` starts a comment line.
//! Weights are signed ω-coordinate tuples like `(1,0,0,-2)`, lists of them
//! are space-separated, and `-` is the empty list.  Diagrams mark the nodes
//! of `H` with `*` and the others with `o`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::conditions::{self, ConditionStatus};
use crate::cone;
use crate::degrees;
use crate::error::{Error, Result};
use crate::root_datum::{shared_root_datum, Family, RootDatum, SimpleType, Weight};
use crate::weyl::{self, SubsetMask};

pub const TABLE_NAMES: [&str; 4] = ["results-connected", "types", "f4-cone", "f4-orbits"];

pub const EXCEPTIONAL: [&str; 5] = ["G2", "F4", "E6", "E7", "E8"];

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

fn fields(line: usize, l: &str, expected: usize) -> Result<Vec<&str>> {
    let f: Vec<&str> = l.split('\t').collect();
    if f.len() != expected {
        return Err(Error::TableParse(line, format!("expected {expected} fields, got {}", f.len())));
    }
    Ok(f)
}

fn parse_weight_list(line: usize, s: &str) -> Result<Vec<Weight>> {
    if s.trim() == "-" {
        return Ok(Vec::new());
    }
    s.split_whitespace().map(|w| Weight::from_str(w).map_err(|e| Error::TableParse(line, e.to_string()))).collect()
}

fn weight_list(ws: &[Weight]) -> String {
    if ws.is_empty() {
        return "-".into();
    }
    ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_type(line: usize, s: &str) -> Result<SimpleType> {
    s.parse().map_err(|e: Error| Error::TableParse(line, e.to_string()))
}

fn parse_diagram(line: usize, s: &str, rank: usize) -> Result<SubsetMask> {
    if s.len() != rank || !s.chars().all(|c| c == 'o' || c == '*') {
        return Err(Error::TableParse(line, format!("bad diagram {s:?}")));
    }
    SubsetMask::parse(s, rank).map_err(|e| Error::TableParse(line, e.to_string()))
}

// ---------------------------------------------------------------- results

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mark {
    SingleCell,
    OrbitBasis,
    /// Exterior for reasons other than the two conditions (`F_4`).
    Exterior,
    Undecided,
    KnownNonExterior,
}

impl Mark {
    pub fn symbol(self) -> &'static str {
        match self {
            Mark::SingleCell => "✓",
            Mark::OrbitBasis => "(ob)",
            Mark::Exterior => "(ext)",
            Mark::Undecided => "?",
            Mark::KnownNonExterior => "x",
        }
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Mark {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mark> {
        Ok(match s {
            "✓" => Mark::SingleCell,
            "(ob)" => Mark::OrbitBasis,
            "(ext)" => Mark::Exterior,
            "?" => Mark::Undecided,
            "x" => Mark::KnownNonExterior,
            _ => return Err(Error::TableParse(0, format!("unknown mark {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultsRow {
    pub simple_type: SimpleType,
    pub subset: SubsetMask,
    pub mark: Mark,
}

/// The mark the library assigns to `(G, H)`.
pub fn mark_for(datum: &RootDatum, h: SubsetMask) -> Mark {
    match conditions::classify_condition(datum, h).status {
        ConditionStatus::SingleCell => Mark::SingleCell,
        ConditionStatus::OrbitBasis => Mark::OrbitBasis,
        ConditionStatus::Neither if datum.simple_type().family == Family::F => Mark::Exterior,
        ConditionStatus::Neither if degrees::is_known_non_exterior(datum, h) => Mark::KnownNonExterior,
        ConditionStatus::Neither => Mark::Undecided,
    }
}

/// One row per class of connected proper `H` (and `H = ∅`), canonical representatives.
pub fn results_connected() -> Result<Vec<ResultsRow>> {
    let mut rows = Vec::new();
    for name in EXCEPTIONAL {
        let ty: SimpleType = name.parse()?;
        let datum = shared_root_datum(ty)?;
        let n = datum.rank();
        let mut classes: Vec<SubsetMask> = weyl::subsets_up_to_equivalence(&datum)
            .into_iter()
            .filter(|h| h.len() < n && (h.is_empty() || h.is_connected(&datum)))
            .collect();
        classes.sort_by_key(|h| (h.len(), *h));
        for h in classes {
            rows.push(ResultsRow { simple_type: ty, subset: h, mark: mark_for(&datum, h) });
        }
    }
    Ok(rows)
}

pub fn format_results(rows: &[ResultsRow]) -> String {
    let mut out = String::from("# type\tdiagram\tmark\n");
    for r in rows {
        out += &format!("{}\t{}\t{}\n", r.simple_type, r.subset.diagram(r.simple_type.rank), r.mark);
    }
    out
}

pub fn parse_results(text: &str) -> Result<Vec<ResultsRow>> {
    data_lines(text)
        .map(|(k, l)| {
            let f = fields(k, l, 3)?;
            let ty = parse_type(k, f[0])?;
            Ok(ResultsRow {
                simple_type: ty,
                subset: parse_diagram(k, f[1], ty.rank)?,
                mark: f[2].parse().map_err(|e: Error| Error::TableParse(k, e.to_string()))?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Agreement {
    Match,
    /// The reference gives no positive mark and a condition holds anyway.
    Stronger,
    Mismatch,
    /// A class the reference does not list.
    Unlisted,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultsComparison {
    pub simple_type: SimpleType,
    pub subset: SubsetMask,
    pub reference: Option<Mark>,
    pub computed: Mark,
    pub agreement: Agreement,
}

/// Match reference rows to computed rows by `W`-equivalence.  A reference ✓
/// or (ob) must be reproduced exactly; any other reference mark must not be
/// contradicted by a computed ✓.
pub fn compare_results(reference: &[ResultsRow], computed: &[ResultsRow]) -> Result<Vec<ResultsComparison>> {
    let mut used = vec![false; computed.len()];
    let mut out = Vec::new();
    for r in reference {
        let datum = shared_root_datum(r.simple_type)?;
        let k =
            computed.iter().position(|c| c.simple_type == r.simple_type && weyl::subsets_equivalent(&datum, c.subset, r.subset));
        let computed_mark = match k {
            Some(k) => {
                used[k] = true;
                computed[k].mark
            }
            None => mark_for(&datum, r.subset),
        };
        let agreement = match (r.mark, computed_mark) {
            (a, b) if a == b => Agreement::Match,
            (Mark::SingleCell | Mark::OrbitBasis, _) => Agreement::Mismatch,
            (_, Mark::SingleCell) => Agreement::Mismatch,
            (Mark::Undecided, Mark::OrbitBasis) => Agreement::Stronger,
            (Mark::Exterior | Mark::KnownNonExterior, Mark::Undecided) => Agreement::Match,
            _ => Agreement::Mismatch,
        };
        out.push(ResultsComparison {
            simple_type: r.simple_type,
            subset: r.subset,
            reference: Some(r.mark),
            computed: computed_mark,
            agreement,
        });
    }
    for (c, u) in computed.iter().zip(used) {
        if !u {
            out.push(ResultsComparison {
                simple_type: c.simple_type,
                subset: c.subset,
                reference: None,
                computed: c.mark,
                agreement: Agreement::Unlisted,
            });
        }
    }
    Ok(out)
}

// ------------------------------------------------------------------ types

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypesRow {
    pub simple_type: SimpleType,
    pub marks: String,
}

pub fn types_table() -> Result<Vec<TypesRow>> {
    SimpleType::all()
        .into_iter()
        .map(|ty| {
            let datum = shared_root_datum(ty)?;
            Ok(TypesRow {
                simple_type: ty,
                marks: (0..ty.rank).map(|a| degrees::fundamental_rep_type(&datum, a).mark()).collect(),
            })
        })
        .collect()
}

pub fn format_types(rows: &[TypesRow]) -> String {
    let mut out = String::from("# type\tnodes\n");
    for r in rows {
        out += &format!("{}\t{}\n", r.simple_type, r.marks);
    }
    out
}

pub fn parse_types(text: &str) -> Result<Vec<TypesRow>> {
    data_lines(text)
        .map(|(k, l)| {
            let f = fields(k, l, 2)?;
            let ty = parse_type(k, f[0])?;
            if f[1].chars().count() != ty.rank || !f[1].chars().all(|c| "xo*".contains(c)) {
                return Err(Error::TableParse(k, format!("bad type marks {:?}", f[1])));
            }
            Ok(TypesRow { simple_type: ty, marks: f[1].to_string() })
        })
        .collect()
}

// --------------------------------------------------------------------- F4

/// `F_4` classes outside the single-cell theorem: `H ≠ ∅`, and `H`
/// disconnected or failing (single cell).
pub fn f4_uncovered() -> Result<Vec<SubsetMask>> {
    let f4 = shared_root_datum(SimpleType::new(Family::F, 4)?)?;
    Ok(weyl::subsets_up_to_equivalence(&f4)
        .into_iter()
        .filter(|h| !h.is_empty() && (!h.is_connected(&f4) || conditions::check_single_cell(&f4, *h).is_none()))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct F4ConeRow {
    pub subset: SubsetMask,
    pub duals: Vec<Weight>,
    pub generators: Vec<Weight>,
    pub free: bool,
}

pub fn f4_cone() -> Result<Vec<F4ConeRow>> {
    let f4 = shared_root_datum(SimpleType::new(Family::F, 4)?)?;
    f4_uncovered()?
        .into_iter()
        .map(|h| {
            let dual = weyl::duality(&f4, h).element;
            let m = cone::hilbert_basis(&f4, h);
            Ok(F4ConeRow {
                subset: h,
                duals: (0..4).map(|i| dual.apply(&f4.fundamental(i))).collect(),
                generators: m.hilbert_basis,
                free: m.is_free,
            })
        })
        .collect()
}

pub fn format_f4_cone(rows: &[F4ConeRow]) -> String {
    let mut out = String::from("# diagram\tdual1\tdual2\tdual3\tdual4\tgenerators\tfree\n");
    for r in rows {
        let duals: Vec<String> = r.duals.iter().map(ToString::to_string).collect();
        out += &format!(
            "{}\t{}\t{}\t{}\n",
            r.subset.diagram(4),
            duals.join("\t"),
            weight_list(&r.generators),
            if r.free { "yes" } else { "no" }
        );
    }
    out
}

pub fn parse_f4_cone(text: &str) -> Result<Vec<F4ConeRow>> {
    data_lines(text)
        .map(|(k, l)| {
            let f = fields(k, l, 7)?;
            let duals = f[1..5]
                .iter()
                .map(|s| Weight::from_str(s).map_err(|e| Error::TableParse(k, e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            let mut generators = parse_weight_list(k, f[5])?;
            generators.sort();
            Ok(F4ConeRow {
                subset: parse_diagram(k, f[0], 4)?,
                duals,
                generators,
                free: match f[6] {
                    "yes" => true,
                    "no" => false,
                    other => return Err(Error::TableParse(k, format!("bad free flag {other:?}"))),
                },
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct F4OrbitsRow {
    pub subset: SubsetMask,
    /// `W ω_i ∩ C̄_H^[H]` for `i = 1..4`.
    pub intersections: Vec<Vec<Weight>>,
}

pub fn f4_orbits() -> Result<Vec<F4OrbitsRow>> {
    let f4 = shared_root_datum(SimpleType::new(Family::F, 4)?)?;
    f4_uncovered()?
        .into_iter()
        .map(|h| {
            Ok(F4OrbitsRow {
                subset: h,
                intersections: conditions::orbit_intersections(&f4, h).into_iter().map(|(_, hits)| hits).collect(),
            })
        })
        .collect()
}

pub fn format_f4_orbits(rows: &[F4OrbitsRow]) -> String {
    let mut out = String::from("# diagram\torbit1\torbit2\torbit3\torbit4\n");
    for r in rows {
        let cols: Vec<String> = r.intersections.iter().map(|ws| weight_list(ws)).collect();
        out += &format!("{}\t{}\n", r.subset.diagram(4), cols.join("\t"));
    }
    out
}

pub fn parse_f4_orbits(text: &str) -> Result<Vec<F4OrbitsRow>> {
    data_lines(text)
        .map(|(k, l)| {
            let f = fields(k, l, 5)?;
            Ok(F4OrbitsRow {
                subset: parse_diagram(k, f[0], 4)?,
                intersections: f[1..]
                    .iter()
                    .map(|s| {
                        let mut ws = parse_weight_list(k, s)?;
                        ws.sort();
                        Ok(ws)
                    })
                    .collect::<Result<_>>()?,
            })
        })
        .collect()
}

/// Pair each reference `F_4` row with the computed row for the same class.
pub fn pair_f4_rows<'a, T>(
    reference: &'a [T],
    computed: &'a [T],
    subset: impl Fn(&T) -> SubsetMask,
) -> Result<Vec<(&'a T, Option<&'a T>)>> {
    let f4 = shared_root_datum(SimpleType::new(Family::F, 4)?)?;
    Ok(reference
        .iter()
        .map(|r| {
            let c = computed.iter().find(|c| weyl::subsets_equivalent(&f4, subset(c), subset(r)));
            (r, c)
        })
        .collect())
}
