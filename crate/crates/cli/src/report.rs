//! Report types shared by the text and JSON renderers.

use std::fmt::Write as _;

use ginv_core::fixtures::Check;
use ginv_core::invariants::{FixedRing, GateVerdict};
use ginv_core::reflection::OrderInfo;
use ginv_core::{ClassificationReport, CycNumber, MolienReport, RootSumProblem, SolutionFamily, TraceFunction};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Top-level JSON document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema: u32,
    #[serde(flatten)]
    pub report: Report,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", content = "report", rename_all = "snake_case")]
pub enum Report {
    Hilbert(HilbertReport),
    Trace(TraceReport),
    Classify(ClassifyReport),
    Molien(MolienCommandReport),
    Gate(GateReport),
    Rootsum(RootsumReport),
    Examples(ExamplesReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub algebra: String,
    pub generators: Vec<String>,
    pub cutoff: usize,
    pub hilbert: String,
    /// No `hilbert` line was given; 1/(1−t)^n was used.
    pub profile_assumed: bool,
    pub dims: Vec<usize>,
    pub expected: Vec<CycNumber>,
    pub first_mismatch: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub name: String,
    pub order: OrderInfo,
    pub trace: TraceFunction,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    pub algebra: String,
    pub profile_assumed: bool,
    pub automorphisms: Vec<TraceEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub algebra: String,
    pub profile_assumed: bool,
    pub automorphisms: Vec<ClassificationReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MolienCommandReport {
    pub algebra: String,
    pub profile_assumed: bool,
    pub generators: Vec<String>,
    pub molien: MolienReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GateReport {
    pub algebra: String,
    pub profile_assumed: bool,
    pub generators: Vec<String>,
    pub classes: Vec<ClassificationReport>,
    pub verdict: GateVerdict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub canonical: String,
    pub provenance: String,
    pub family: SolutionFamily,
}

impl From<SolutionFamily> for FamilyEntry {
    fn from(family: SolutionFamily) -> Self {
        FamilyEntry { canonical: family.to_string(), provenance: family.provenance().to_string(), family }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootsumReport {
    pub problem: RootSumProblem,
    pub families: Vec<FamilyEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExamplesReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl ExamplesReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        ExamplesReport { failed: checks.len() - passed, passed, checks }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn order_text(o: &OrderInfo) -> String {
    match o {
        OrderInfo::Finite(m) => format!("order {m}"),
        OrderInfo::ExceedsCap(cap) => format!("order exceeds {cap}"),
    }
}

fn assumed_note(out: &mut String, assumed: bool) {
    if assumed {
        out.push_str("note: no hilbert line; assuming 1/(1-t)^n\n");
    }
}

fn classification_line(c: &ClassificationReport) -> String {
    let mut s = format!("{}: {}", c.name, c.kind.as_str());
    if let Some(xi) = &c.xi {
        let _ = write!(s, ", ξ = {xi}");
    }
    let _ = write!(s, ", {}", order_text(&c.order));
    s
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        match self {
            Report::Hilbert(r) => {
                assumed_note(o, r.profile_assumed);
                let _ = writeln!(o, "algebra {} on {}", r.algebra, r.generators.join(", "));
                let _ = writeln!(o, "dims through degree {}: {}", r.cutoff, join(&r.dims));
                let _ = writeln!(o, "declared Hilbert series {}: {}", r.hilbert, join(&r.expected));
                match r.first_mismatch {
                    None => {
                        let _ = writeln!(o, "verified through degree {}", r.cutoff);
                    }
                    Some(d) => {
                        let _ = writeln!(o, "MISMATCH at degree {d}: found {}, expected {}", r.dims[d], r.expected[d]);
                    }
                }
            }
            Report::Trace(r) => {
                assumed_note(o, r.profile_assumed);
                for e in &r.automorphisms {
                    let t = &e.trace;
                    let _ = writeln!(o, "{}: {}", e.name, order_text(&e.order));
                    let _ = writeln!(o, "  trace: {}", join(&t.coefficients));
                    if let Some(euler) = &t.euler {
                        let _ = writeln!(o, "  Euler polynomial: {euler}");
                    }
                    if let Some(roots) = &t.roots {
                        let rs: Vec<String> = roots.iter().map(|(r, m)| format!("{r} (x{m})")).collect();
                        let _ = writeln!(o, "  inverse roots: {}", rs.join(", "));
                    }
                    if let Some(h) = &t.hdet {
                        let _ = writeln!(o, "  hdet: {h}");
                    }
                    if let Some(l) = t.l {
                        let _ = writeln!(o, "  l: {l}");
                    }
                }
            }
            Report::Classify(r) => {
                assumed_note(o, r.profile_assumed);
                for c in &r.automorphisms {
                    let _ = writeln!(o, "{}", classification_line(c));
                    let _ = writeln!(
                        o,
                        "  case: {}; pole order at 1: {}; hdet: {}; Euler polynomial: {}",
                        c.case, c.pole_order_at_one, c.hdet, c.euler
                    );
                    if let Some(ev) = &c.eigenvalues {
                        let es: Vec<String> = ev.iter().map(|(r, m)| format!("{r} (x{m})")).collect();
                        let _ = writeln!(o, "  eigenvalues on degree 1: {}", es.join(", "));
                    }
                }
            }
            Report::Molien(r) => {
                assumed_note(o, r.profile_assumed);
                let m = &r.molien;
                let _ = writeln!(o, "group of order {} generated by {}", m.group_order, r.generators.join(", "));
                let _ = writeln!(o, "Molien series: {}", join(&m.series));
                match &m.fixed_ring {
                    FixedRing::Reconstructed { euler, q, q_at_one, deg_q, q_at_one_is_order, deg_q_is_count } => {
                        let _ = writeln!(o, "fixed ring: 1/e(t) with e = {euler}");
                        let _ = writeln!(o, "  q = {q}; q(1) = {q_at_one} (= |G|: {q_at_one_is_order}); deg q = {deg_q} (= r: {deg_q_is_count})");
                    }
                    FixedRing::PoleOrderMismatch { euler } => {
                        let _ = writeln!(o, "fixed ring: 1/e(t) with e = {euler}, but (1-t)^n does not divide e");
                    }
                    FixedRing::NotInverseOfPolynomial { max_degree_tried } => {
                        let _ = writeln!(o, "fixed ring: not of the form 1/e(t) with deg e <= {max_degree_tried}");
                    }
                }
                let _ = writeln!(o, "quasi-reflections: r = {}", m.quasi_count_direct);
                match &m.quasi_count_laurent {
                    Some(c) => {
                        let _ = writeln!(o, "Laurent coefficient {c}; r/(2|G|) = {}", m.laurent_expected);
                    }
                    None => {
                        let _ = writeln!(o, "Laurent coefficient not computed; r/(2|G|) = {}", m.laurent_expected);
                    }
                }
            }
            Report::Gate(r) => {
                assumed_note(o, r.profile_assumed);
                let v = &r.verdict;
                let _ = writeln!(o, "group of order {} generated by {}", v.group_order, r.generators.join(", "));
                for c in &r.classes {
                    let _ = writeln!(o, "  {}", classification_line(c));
                }
                let rule = serde_json::to_value(v.rule).ok().and_then(|x| x.as_str().map(String::from)).unwrap_or_default();
                let _ = writeln!(o, "{} (rule: {rule})", v.summary());
                if !v.quasi_reflections.is_empty() {
                    let _ = writeln!(o, "quasi-reflections: {}", v.quasi_reflections.join(", "));
                }
                for n in &v.notes {
                    let _ = writeln!(o, "note: {n}");
                }
            }
            Report::Rootsum(r) => {
                let p = &r.problem;
                let mut flags = String::new();
                if p.no_minus_one {
                    flags += ", no -1";
                }
                if p.no_cancelling_pair {
                    flags += ", no cancelling pair";
                }
                let _ = writeln!(o, "target {}, count {}{flags}: families found: {}", p.target, p.count, r.families.len());
                for f in &r.families {
                    let _ = writeln!(o, "  [{}] {}", f.provenance, f.canonical);
                }
            }
            Report::Examples(r) => {
                for c in &r.checks {
                    if c.passed {
                        let _ = writeln!(o, "PASS {}: {}", c.fixture, c.claim);
                    } else {
                        let _ = writeln!(o, "FAIL {}: {} ({})", c.fixture, c.claim, c.detail);
                    }
                }
                let _ = writeln!(o, "{} of {} checks passed", r.passed, r.passed + r.failed);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ginv_core::rootsum::solve;

    #[test]
    fn envelope_round_trips_and_keeps_schema() {
        let fams = solve(&RootSumProblem::new(2, 4)).unwrap();
        let report = Report::Rootsum(RootsumReport {
            problem: RootSumProblem::new(2, 4),
            families: fams.into_iter().map(FamilyEntry::from).collect(),
        });
        let env = Envelope { schema: SCHEMA_VERSION, report };
        let json = serde_json::to_string(&env).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["schema"], 1);
        assert_eq!(value["command"], "rootsum");
        let back: Envelope = serde_json::from_str(&json).unwrap();
        assert_eq!(back, env);
        assert_eq!(back.report.to_text(), env.report.to_text());
    }

    #[test]
    fn examples_counts() {
        let check = |passed| Check { fixture: "f".into(), claim: "c".into(), passed, detail: "d".into() };
        let r = ExamplesReport::new(vec![check(true), check(false), check(true)]);
        assert_eq!((r.passed, r.failed), (2, 1));
        let text = Report::Examples(r).to_text();
        assert!(text.contains("FAIL f: c (d)"));
        assert!(text.ends_with("2 of 3 checks passed\n"));
    }
}
