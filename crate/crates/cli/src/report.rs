//! Building and rendering the analysis, downgrade and sweep reports.
//!
//! JSON reports are serde structs, so key order is fixed by declaration and
//! output is byte-identical for identical inputs. Integers of every size
//! are emitted as JSON number literals via `serde_json`'s
//! arbitrary-precision support.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;
use std::fmt::Write as _;
use tring::abgroup::{ElementOrder, FgAbGroup, GroupElement};
use tring::coxring::{self, AdmissibilityReport, CoxPresentation, DowngradeData};
use tring::lattice::IntMatrix;
use tring::trinomial::{FactorialityError, FactorialityEvidence, Violation};
use tring::{RingPresentation, TripleData};

/// JSON number of arbitrary size.
fn big(x: &BigInt) -> Value {
    serde_json::from_str(&x.to_string()).expect("integer literals are valid JSON")
}

fn matrix_json(m: &IntMatrix) -> Vec<Vec<Value>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| big(m.at(r, c))).collect())
        .collect()
}

#[derive(Serialize)]
pub struct GroupJson {
    pub rank: usize,
    pub torsion: Vec<Value>,
}

fn group_json(g: &FgAbGroup) -> GroupJson {
    GroupJson {
        rank: g.rank(),
        torsion: g.torsion().iter().map(big).collect(),
    }
}

#[derive(Serialize)]
pub struct DegreeJson {
    pub var: String,
    pub free: Vec<Value>,
    pub torsion: Vec<Value>,
}

fn degree_json(var: String, e: &GroupElement) -> DegreeJson {
    DegreeJson {
        var,
        free: e.free_part().iter().map(big).collect(),
        torsion: e.torsion_part().iter().map(big).collect(),
    }
}

/// Report for a document that failed validation.
#[derive(Serialize)]
pub struct InvalidReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Full analysis report of a valid defining datum.
#[derive(Serialize)]
pub struct AnalysisReport {
    pub valid: bool,
    pub violations: Vec<String>,
    pub r: usize,
    pub n_total: usize,
    pub sincere: bool,
    #[serde(rename = "P")]
    pub p: Vec<Vec<Value>>,
    #[serde(rename = "K")]
    pub k: GroupJson,
    pub degrees: Vec<DegreeJson>,
    pub relations: Vec<String>,
    /// `true`, `false`, or `"n/a: not sincere"`.
    pub factorial: Value,
    pub pointed_witness: Vec<Value>,
    pub complexity_one: bool,
}

/// Computed analysis bundle, shared by the JSON and text renderers.
pub struct Analysis {
    pub presentation: RingPresentation,
    pub factoriality: Option<FactorialityEvidence>,
}

/// Validates and analyzes a datum. `Err` carries the violations.
///
/// A factoriality evidence mismatch would mean the two verdict routes
/// disagree; that is a hard internal failure and aborts loudly.
pub fn analyze(triple: &TripleData) -> Result<Analysis, Vec<Violation>> {
    let presentation = triple.presentation()?;
    let factoriality = match presentation.factoriality() {
        Ok(ev) => Some(ev),
        Err(FactorialityError::NotSincere) => None,
        Err(e @ FactorialityError::EvidenceMismatch { .. }) => {
            panic!("{e}; datum: n={:?}, L={:?}", triple.block_sizes(), triple.exponents())
        }
    };
    Ok(Analysis {
        presentation,
        factoriality,
    })
}

pub fn invalid_report(violations: &[Violation]) -> InvalidReport {
    InvalidReport {
        valid: false,
        violations: violations.iter().map(|v| v.to_string()).collect(),
    }
}

pub fn analysis_report(a: &Analysis) -> AnalysisReport {
    let pres = &a.presentation;
    let t = pres.triple();
    let names = pres.var_names();
    AnalysisReport {
        valid: true,
        violations: Vec::new(),
        r: t.r(),
        n_total: t.total_vars(),
        sincere: t.is_sincere(),
        p: matrix_json(pres.p_matrix()),
        k: group_json(pres.grading()),
        degrees: names
            .iter()
            .zip(pres.degrees())
            .map(|(name, d)| degree_json(name.clone(), d))
            .collect(),
        relations: pres
            .relations()
            .iter()
            .map(|g| g.render(&names))
            .collect(),
        factorial: match &a.factoriality {
            Some(ev) => Value::from(ev.is_factorial()),
            None => Value::from("n/a: not sincere"),
        },
        pointed_witness: t.pointedness_witness().iter().map(big).collect(),
        complexity_one: pres.is_complexity_one(),
    }
}

/// `Z ⊕ Z/2 ⊕ Z/2`-style group rendering.
fn group_text(g: &FgAbGroup) -> String {
    let mut parts: Vec<String> = (0..g.rank()).map(|_| "Z".to_string()).collect();
    parts.extend(g.torsion().iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ⊕ ")
    }
}

fn element_text(g: &FgAbGroup, e: &GroupElement) -> String {
    let mut parts: Vec<String> = e.free_part().iter().map(|x| x.to_string()).collect();
    parts.extend(
        e.torsion_part()
            .iter()
            .zip(g.torsion())
            .map(|(x, d)| format!("{x} mod {d}")),
    );
    format!("({})", parts.join(", "))
}

fn matrix_text(m: &IntMatrix, indent: &str) -> String {
    let widths: Vec<usize> = (0..m.cols())
        .map(|c| (0..m.rows()).map(|r| m.at(r, c).to_string().len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for r in 0..m.rows() {
        write!(out, "{indent}[").unwrap();
        for (c, width) in widths.iter().enumerate() {
            write!(out, " {:>width$}", m.at(r, c)).unwrap();
        }
        out.push_str(" ]\n");
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn invalid_text(violations: &[Violation]) -> String {
    let mut out = String::from("valid: no\n");
    for v in violations {
        writeln!(out, "  violation: {v}").unwrap();
    }
    out
}

pub fn analysis_text(a: &Analysis) -> String {
    let pres = &a.presentation;
    let t = pres.triple();
    let names = pres.var_names();
    let k = pres.grading();
    let mut out = String::new();
    writeln!(out, "valid: yes").unwrap();
    writeln!(out, "r: {}", t.r()).unwrap();
    writeln!(out, "variables: {} [{}]", t.total_vars(), names.join(", ")).unwrap();
    writeln!(out, "sincere: {}", yes_no(t.is_sincere())).unwrap();
    writeln!(out, "P:").unwrap();
    out.push_str(&matrix_text(pres.p_matrix(), "  "));
    writeln!(
        out,
        "K: {} (rank {}, torsion [{}])",
        group_text(k),
        k.rank(),
        k.torsion()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
    .unwrap();
    writeln!(out, "degrees:").unwrap();
    for (name, d) in names.iter().zip(pres.degrees()) {
        writeln!(out, "  deg {name} = {}", element_text(k, d)).unwrap();
    }
    writeln!(out, "relations:").unwrap();
    for g in pres.relations() {
        writeln!(out, "  {}", g.render(&names)).unwrap();
    }
    match &a.factoriality {
        Some(ev) => writeln!(
            out,
            "factorial: {} (block gcds [{}], torsion free: {})",
            yes_no(ev.is_factorial()),
            ev.block_gcds
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            yes_no(ev.torsion_free)
        )
        .unwrap(),
        None => writeln!(out, "factorial: n/a: not sincere").unwrap(),
    }
    writeln!(
        out,
        "pointed witness: ({})",
        t.pointedness_witness()
            .iter()
            .map(|z| z.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
    .unwrap();
    writeln!(out, "complexity one: {}", yes_no(pres.is_complexity_one())).unwrap();
    out
}

#[derive(Serialize)]
pub struct ChecksJson {
    pub bound: bool,
    pub columns_primitive: bool,
    pub columns_distinct: bool,
    pub cone_full: bool,
}

#[derive(Serialize)]
pub struct IsotropyJson {
    pub var: String,
    /// A positive integer or the string `"infinite"`.
    pub order: Value,
}

#[derive(Serialize)]
pub struct CoxReport {
    pub admissible: bool,
    pub r: usize,
    pub s: usize,
    pub n_total: usize,
    pub m: usize,
    #[serde(rename = "dotP")]
    pub dot_p: Vec<Vec<Value>>,
    pub checks: ChecksJson,
    pub nonprimitive_columns: Vec<usize>,
    pub duplicate_columns: Vec<(usize, usize)>,
    #[serde(rename = "Kdot", skip_serializing_if = "Option::is_none")]
    pub kdot: Option<GroupJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<DegreeJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isotropy: Option<Vec<IsotropyJson>>,
    /// `true` when distinct degrees certify pairwise nonassociated
    /// generators, `"inconclusive"` when some degrees collide.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonassociated_generators: Option<Value>,
}

fn checks_json(rep: &AdmissibilityReport) -> ChecksJson {
    ChecksJson {
        bound: rep.bound_ok,
        columns_primitive: rep.columns_primitive(),
        columns_distinct: rep.columns_distinct(),
        cone_full: rep.cone_full,
    }
}

/// All variable names of the downgraded ring: `T` columns then `S` columns.
fn cox_names(cox: &CoxPresentation) -> Vec<String> {
    let mut names = cox.base().var_names();
    for k in 0..cox.data().extra_vars() {
        names.push(coxring::s_var_name(k));
    }
    names
}

pub fn cox_report(cox: &CoxPresentation) -> CoxReport {
    let base = cox.base();
    let t = base.triple();
    let names = cox_names(cox);
    let degrees: Vec<DegreeJson> = names
        .iter()
        .zip(cox.t_degrees().iter().chain(cox.s_degrees()))
        .map(|(name, d)| degree_json(name.clone(), d))
        .collect();
    let isotropy: Vec<IsotropyJson> = names
        .iter()
        .enumerate()
        .map(|(col, name)| IsotropyJson {
            var: name.clone(),
            order: match cox.isotropy_order(col) {
                ElementOrder::Finite(d) => big(&d),
                ElementOrder::Infinite => Value::from("infinite"),
            },
        })
        .collect();
    let distinct = cox.degrees_pairwise_distinct();
    CoxReport {
        admissible: true,
        r: t.r(),
        s: cox.data().s(),
        n_total: t.total_vars(),
        m: cox.data().extra_vars(),
        dot_p: matrix_json(cox.block_matrix()),
        checks: checks_json(cox.admissibility()),
        nonprimitive_columns: Vec::new(),
        duplicate_columns: Vec::new(),
        kdot: Some(group_json(cox.grading())),
        degrees: Some(degrees),
        isotropy: Some(isotropy),
        nonassociated_generators: Some(if distinct {
            Value::from(true)
        } else {
            Value::from("inconclusive")
        }),
    }
}

/// Report for downgrade data that failed admissibility.
pub fn inadmissible_report(
    base: &RingPresentation,
    data: &DowngradeData,
    rep: &AdmissibilityReport,
    block: &IntMatrix,
) -> CoxReport {
    CoxReport {
        admissible: false,
        r: base.triple().r(),
        s: data.s(),
        n_total: base.triple().total_vars(),
        m: data.extra_vars(),
        dot_p: matrix_json(block),
        checks: checks_json(rep),
        nonprimitive_columns: rep.nonprimitive_columns.clone(),
        duplicate_columns: rep.duplicate_columns.clone(),
        kdot: None,
        degrees: None,
        isotropy: None,
        nonassociated_generators: None,
    }
}

pub fn cox_text(report: &CoxReport, block: &IntMatrix) -> String {
    let mut out = String::new();
    writeln!(out, "admissible: {}", yes_no(report.admissible)).unwrap();
    writeln!(
        out,
        "r: {}, s: {}, n: {}, m: {}",
        report.r, report.s, report.n_total, report.m
    )
    .unwrap();
    writeln!(out, "dotP:").unwrap();
    out.push_str(&matrix_text(block, "  "));
    writeln!(
        out,
        "checks: bound {}, primitive {}, distinct {}, cone full {}",
        yes_no(report.checks.bound),
        yes_no(report.checks.columns_primitive),
        yes_no(report.checks.columns_distinct),
        yes_no(report.checks.cone_full)
    )
    .unwrap();
    if !report.nonprimitive_columns.is_empty() {
        writeln!(out, "  nonprimitive columns: {:?}", report.nonprimitive_columns).unwrap();
    }
    if !report.duplicate_columns.is_empty() {
        writeln!(out, "  duplicate columns: {:?}", report.duplicate_columns).unwrap();
    }
    if let Some(k) = &report.kdot {
        let mut parts: Vec<String> = (0..k.rank).map(|_| "Z".to_string()).collect();
        parts.extend(k.torsion.iter().map(|d| format!("Z/{}", value_text(d))));
        let shape = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        };
        writeln!(
            out,
            "Kdot: {shape} (rank {}, torsion [{}])",
            k.rank,
            join_values(&k.torsion)
        )
        .unwrap();
        if let Some(degrees) = &report.degrees {
            writeln!(out, "degrees:").unwrap();
            for d in degrees {
                let mut parts: Vec<String> = d.free.iter().map(value_text).collect();
                parts.extend(
                    d.torsion
                        .iter()
                        .zip(&k.torsion)
                        .map(|(x, m)| format!("{} mod {}", value_text(x), value_text(m))),
                );
                writeln!(out, "  deg {} = ({})", d.var, parts.join(", ")).unwrap();
            }
        }
    }
    if let Some(isotropy) = &report.isotropy {
        writeln!(out, "isotropy orders:").unwrap();
        for i in isotropy {
            writeln!(out, "  {}: {}", i.var, value_text(&i.order)).unwrap();
        }
    }
    if let Some(n) = &report.nonassociated_generators {
        writeln!(out, "nonassociated generators: {}", value_text(n)).unwrap();
    }
    out
}

fn join_values(values: &[Value]) -> String {
    values.iter().map(value_text).collect::<Vec<_>>().join(", ")
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One line of the enumeration stream.
#[derive(Serialize)]
pub struct EnumerateLine {
    pub index: u64,
    pub n: Vec<usize>,
    #[serde(rename = "L")]
    pub l: Vec<Vec<u64>>,
    pub report: AnalysisReport,
}

pub fn enumerate_line(index: u64, triple: &TripleData) -> EnumerateLine {
    let analysis = analyze(triple).expect("sweep candidates are valid");
    EnumerateLine {
        index,
        n: triple.block_sizes().to_vec(),
        l: triple.exponents().to_vec(),
        report: analysis_report(&analysis),
    }
}

/// Trailing summary of an enumeration stream.
#[derive(Serialize)]
pub struct EnumerateSummary {
    pub candidates: u64,
    pub emitted: u64,
    pub sincere: u64,
    pub factorial: u64,
    pub not_factorial: u64,
}

#[derive(Serialize)]
pub struct SummaryLine {
    pub summary: EnumerateSummary,
}
