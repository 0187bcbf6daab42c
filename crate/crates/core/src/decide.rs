//! The decision procedure: criterion filter, wedge candidates, triviality.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{extended_wedge_site, modify, schubert_diagram, Modification, SchubertDiagram, CALIBRATION_ID};
use crate::error::{Error, Result};
use crate::invariants::{is_trivial, Budget, TrivialityVerdict};
use crate::lens::oracle::{moser_lens_space, TorusKnotSurgery};
use crate::lens::{canonical_form, DualKnotSpec};
use crate::residue::{klein_params, longitudinal_criterion, CriterionResult, LensParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CandidateVerdict {
    Knot { crossings: usize, verdict: TrivialityVerdict },
    Link { components: usize },
}

impl CandidateVerdict {
    pub fn is_trivial_knot(&self) -> bool {
        matches!(self, CandidateVerdict::Knot { verdict, .. } if verdict.is_trivial())
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, CandidateVerdict::Knot { verdict: TrivialityVerdict::Unknown { .. }, .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct URecord {
    pub u: i64,
    pub criterion: CriterionResult,
    /// Empty when the criterion rejects `u`.
    pub diagram_verdicts: BTreeMap<Modification, CandidateVerdict>,
}

impl URecord {
    pub fn is_witness(&self) -> bool {
        self.diagram_verdicts.values().any(CandidateVerdict::is_trivial_knot)
    }

    pub fn is_unknown(&self) -> bool {
        !self.is_witness() && self.diagram_verdicts.values().any(CandidateVerdict::is_unknown)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obtainable {
    Yes,
    No,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensSummary {
    pub p: i64,
    pub q: i64,
    pub canonical_q: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub lens: LensSummary,
    pub per_u: Vec<URecord>,
    pub obtainable: Obtainable,
    pub witnesses: Vec<i64>,
    pub budget: Budget,
    pub calibration_id: String,
}

impl DecisionReport {
    pub fn canonical_params(&self) -> LensParams {
        LensParams::new(self.lens.p, self.lens.canonical_q).expect("report holds valid parameters")
    }

    /// The `u` left unresolved by the triviality search.
    pub fn unknown(&self) -> Vec<i64> {
        self.per_u.iter().filter(|r| r.is_unknown()).map(|r| r.u).collect()
    }
}

/// Verdicts for every modification at bottom position `u` (`1 <= u <= p-1`).
pub fn candidate_verdicts(
    diagram: &SchubertDiagram,
    u: i64,
    budget: &Budget,
) -> Result<BTreeMap<Modification, CandidateVerdict>> {
    let site = extended_wedge_site(diagram, u)?;
    let mut out = BTreeMap::new();
    for mode in Modification::ALL {
        let map = modify(diagram, site, mode)?;
        let k = map.component_count();
        let v = if k == 1 {
            CandidateVerdict::Knot { crossings: map.len(), verdict: is_trivial(&map, budget)? }
        } else {
            CandidateVerdict::Link { components: k }
        };
        out.insert(mode, v);
    }
    Ok(out)
}

pub fn decide(params: LensParams, budget: &Budget) -> Result<DecisionReport> {
    budget.validate()?;
    let canon = canonical_form(params);
    let p = canon.p();
    let diagram = schubert_diagram(canon)?;
    let mut per_u = (1..=p / 2)
        .into_par_iter()
        .map(|u| {
            let criterion = longitudinal_criterion(DualKnotSpec::new(canon, u)?)?;
            let diagram_verdicts =
                if criterion.passes { candidate_verdicts(&diagram, u, budget)? } else { BTreeMap::new() };
            Ok(URecord { u, criterion, diagram_verdicts })
        })
        .collect::<Result<Vec<_>>>()?;
    per_u.sort_by_key(|r| r.u);
    let witnesses: Vec<i64> = per_u.iter().filter(|r| r.is_witness()).map(|r| r.u).collect();
    let obtainable = if !witnesses.is_empty() {
        Obtainable::Yes
    } else if per_u.iter().any(URecord::is_unknown) {
        Obtainable::Inconclusive
    } else {
        Obtainable::No
    };
    Ok(DecisionReport {
        lens: LensSummary { p, q: params.q(), canonical_q: canon.q() },
        per_u,
        obtainable,
        witnesses,
        budget: *budget,
        calibration_id: CALIBRATION_ID.to_string(),
    })
}

/// Runs [`decide`] on `L(4n, 2n-1)` for each `n` in range.
pub fn klein_scan(n_min: i64, n_max: i64, budget: &Budget) -> Result<Vec<DecisionReport>> {
    if n_min < 2 {
        return Err(Error::OutOfRange { value: n_min, min: 2, max: i64::MAX });
    }
    if n_max < n_min {
        return Err(Error::OutOfRange { value: n_max, min: n_min, max: i64::MAX });
    }
    (n_min..=n_max).map(|n| decide(klein_params(n)?, budget)).collect()
}

/// For a positive report on `L(16,7)` or `L(20,9)`: whether surgery on the
/// matching torus knot gives the same lens space.
pub fn cross_check_torus(report: &DecisionReport) -> Result<bool> {
    if report.obtainable != Obtainable::Yes {
        return Err(Error::Precondition("cross-check needs an obtainable lens space".into()));
    }
    let canon = report.canonical_params();
    let torus = match (canon.p(), canon.q()) {
        (16, 7) => TorusKnotSurgery::new(5, 3, 1)?,
        (20, 9) => TorusKnotSurgery::new(7, 3, -1)?,
        _ => return Err(Error::Precondition(format!("{canon} is not a Klein-bottle case"))),
    };
    Ok(moser_lens_space(torus)? == canon)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(p: i64, q: i64) -> LensParams {
        LensParams::new(p, q).unwrap()
    }

    #[test]
    fn lens_five_one() {
        let r = decide(lp(5, 1), &Budget::default()).unwrap();
        assert_eq!(r.obtainable, Obtainable::Yes);
        assert!(r.witnesses.contains(&2));
        assert!(cross_check_torus(&r).is_err());
    }

    #[test]
    fn klein_anchors() {
        let r = decide(lp(16, 7), &Budget::default()).unwrap();
        assert_eq!(r.witnesses, vec![3, 5]);
        assert!(cross_check_torus(&r).unwrap());
        let r = decide(lp(20, 9), &Budget::default()).unwrap();
        assert_eq!(r.witnesses, vec![3, 7]);
        assert!(cross_check_torus(&r).unwrap());
    }

    #[test]
    fn small_klein_cases_are_no() {
        for n in [2, 3] {
            let r = decide(klein_params(n).unwrap(), &Budget::default()).unwrap();
            assert_eq!(r.obtainable, Obtainable::No, "n = {n}");
        }
    }

    #[test]
    fn input_is_canonicalised() {
        let r = decide(lp(16, 9), &Budget::default()).unwrap();
        assert_eq!(r.lens, LensSummary { p: 16, q: 9, canonical_q: 7 });
        assert_eq!(r.witnesses, vec![3, 5]);
    }
}
