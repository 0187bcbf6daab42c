//! Text and JSON renderings of reports.

use std::fmt::Write as _;

use crate::decide::{CandidateVerdict, DecisionReport, Obtainable};
use crate::diagram::Modification;
use crate::error::{Error, Result};
use crate::invariants::TrivialityVerdict;
use crate::residue::CriterionResult;

pub fn criterion_line(r: &CriterionResult) -> String {
    format!("psi={} phi={} value={} {}", r.psi, r.phi, r.value, if r.passes { "pass" } else { "fail" })
}

pub fn obtainable_name(o: Obtainable) -> &'static str {
    match o {
        Obtainable::Yes => "yes",
        Obtainable::No => "no",
        Obtainable::Inconclusive => "inconclusive",
    }
}

fn verdict_text(v: &CandidateVerdict) -> String {
    match v {
        CandidateVerdict::Link { components } => format!("link ({components} components)"),
        CandidateVerdict::Knot { crossings, verdict } => {
            let tail = match verdict {
                TrivialityVerdict::Trivial { certificate } => format!("trivial, certificate of {} moves", certificate.len()),
                TrivialityVerdict::Nontrivial { witness } => format!("nontrivial, {} {}", witness.invariant, witness.value),
                TrivialityVerdict::Unknown { nodes_visited, reason } => {
                    format!("unknown after {nodes_visited} diagrams ({reason})")
                }
            };
            format!("knot, {crossings} crossings, {tail}")
        }
    }
}

pub fn decision_text(report: &DecisionReport) -> String {
    let l = report.lens;
    let mut out = String::new();
    let _ = writeln!(out, "L({},{}) canonical L({},{})", l.p, l.q, l.p, l.canonical_q);
    for rec in &report.per_u {
        let _ = writeln!(out, "u={} {}", rec.u, criterion_line(&rec.criterion));
        for mode in Modification::ALL {
            if let Some(v) = rec.diagram_verdicts.get(&mode) {
                let _ = writeln!(out, "    {:<10} {}", mode.name(), verdict_text(v));
            }
        }
    }
    let w: Vec<String> = report.witnesses.iter().map(i64::to_string).collect();
    let _ = writeln!(out, "obtainable: {}", obtainable_name(report.obtainable));
    let _ = writeln!(out, "witnesses: [{}]", w.join(", "));
    if report.obtainable == Obtainable::Inconclusive {
        let u: Vec<String> = report.unknown().iter().map(i64::to_string).collect();
        let _ = writeln!(out, "unresolved: [{}]", u.join(", "));
    }
    let _ = writeln!(out, "calibration: {}", report.calibration_id);
    out
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialise")
}

pub fn decision_from_json(text: &str) -> Result<DecisionReport> {
    serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::decide;
    use crate::invariants::Budget;
    use crate::residue::LensParams;

    #[test]
    fn json_round_trip() {
        let r = decide(LensParams::new(5, 1).unwrap(), &Budget::default()).unwrap();
        let text = to_json(&r);
        assert_eq!(decision_from_json(&text).unwrap(), r);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["budget", "calibration_id", "lens", "obtainable", "per_u", "witnesses"]);
        assert_eq!(v["obtainable"], "yes");
    }

    #[test]
    fn criterion_text() {
        let r = CriterionResult { u: 3, psi: 5, phi: 0, value: -15, passes: true };
        assert_eq!(criterion_line(&r), "psi=5 phi=0 value=-15 pass");
    }
}
