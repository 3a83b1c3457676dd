//! Probe-based checks of the completeness and Heine-Borel characterizations.
//!
//! Universally quantified clauses are only checked on the supplied probes, so
//! a passing report is evidence, not a proof.

use rayon::prelude::*;
use serde::Serialize;

use super::ops::{in_galaxy, is_approachable, is_nearstandard};
use super::space::{ExtendedPoint, MetricSpace, SpaceId, SpaceMeta};
use crate::lcf::{Precision, Truth};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeVerdict {
    pub point: String,
    pub finite: Truth,
    pub approachable: Truth,
    pub nearstandard: Truth,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_point: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub observed: Truth,
    /// `None` for clauses reported for information only.
    pub expected: Option<bool>,
    pub details: String,
}

impl Clause {
    pub fn satisfied(&self) -> bool {
        match self.expected {
            Some(e) => self.observed == Truth::from_bool(e),
            None => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub check: &'static str,
    pub space: SpaceId,
    pub metadata: SpaceMeta,
    pub probes: Vec<ProbeVerdict>,
    pub clauses: Vec<Clause>,
    /// Probes for which some oracle answered `unknown`.
    pub unknown_verdicts: usize,
    pub contradiction: bool,
    pub passed: bool,
}

pub fn probe_verdicts(s: &dyn MetricSpace, probes: &[ExtendedPoint], precision: &Precision) -> Vec<ProbeVerdict> {
    probes
        .par_iter()
        .map(|p| {
            let near = is_nearstandard(s, p, precision);
            ProbeVerdict {
                point: p.display_decimal(12),
                finite: in_galaxy(s, p, precision),
                approachable: is_approachable(s, p, precision),
                nearstandard: near.truth(),
                standard_point: near.point().map(|q| q.display_decimal(12)),
            }
        })
        .collect()
}

/// `True` if `pred` holds on every selected probe, `False` if it fails on one,
/// `Unknown` otherwise (including when nothing is selected).
fn for_all(
    verdicts: &[ProbeVerdict],
    select: impl Fn(&ProbeVerdict) -> bool,
    pred: impl Fn(&ProbeVerdict) -> Truth,
) -> (Truth, usize) {
    let selected: Vec<&ProbeVerdict> = verdicts.iter().filter(|v| select(v)).collect();
    let outcomes: Vec<Truth> = selected.iter().map(|v| pred(v)).collect();
    let truth = if outcomes.contains(&Truth::False) {
        Truth::False
    } else if selected.is_empty() || outcomes.contains(&Truth::Unknown) {
        Truth::Unknown
    } else {
        Truth::True
    };
    (truth, selected.len())
}

fn exists(verdicts: &[ProbeVerdict], pred: impl Fn(&ProbeVerdict) -> bool) -> Option<&ProbeVerdict> {
    verdicts.iter().find(|v| pred(v))
}

fn unknown_count(verdicts: &[ProbeVerdict]) -> usize {
    verdicts.iter().filter(|v| [v.finite, v.approachable, v.nearstandard].contains(&Truth::Unknown)).count()
}

/// Nearstandard points are approachable; any probe violating that is a bug.
fn monotone_violations(verdicts: &[ProbeVerdict]) -> usize {
    verdicts.iter().filter(|v| v.nearstandard == Truth::True && v.approachable == Truth::False).count()
}

/// Every approachable point is nearstandard exactly when the space is complete.
pub fn check_proposition_a(s: &dyn MetricSpace, probes: &[ExtendedPoint], precision: &Precision) -> HarnessReport {
    let verdicts = probe_verdicts(s, probes, precision);
    let meta = s.metadata();
    let mut clauses = Vec::new();
    if meta.is_complete {
        let (observed, n) = for_all(&verdicts, |v| v.approachable == Truth::True, |v| v.nearstandard);
        clauses.push(Clause {
            name: "approachable-implies-nearstandard",
            observed,
            expected: Some(true),
            details: format!("checked on {n} approachable probes"),
        });
    } else {
        let witness = exists(&verdicts, |v| v.approachable == Truth::True && v.nearstandard == Truth::False);
        clauses.push(Clause {
            name: "incompleteness-witness",
            observed: Truth::from_bool(witness.is_some()),
            expected: Some(true),
            details: match witness {
                Some(w) => format!("{} is approachable but not nearstandard", w.point),
                None => "no approachable, non-nearstandard probe supplied".to_string(),
            },
        });
    }
    let violations = monotone_violations(&verdicts);
    clauses.push(Clause {
        name: "nearstandard-implies-approachable",
        observed: Truth::from_bool(violations == 0),
        expected: Some(true),
        details: format!("{violations} violations"),
    });
    finish("proposition-a", s.id(), meta, verdicts, clauses, violations > 0)
}

/// For the completion being Heine-Borel, all finite points being approachable
/// and the completion coinciding with the hull are equivalent.
pub fn check_theorem_b(s: &dyn MetricSpace, probes: &[ExtendedPoint], precision: &Precision) -> HarnessReport {
    let verdicts = probe_verdicts(s, probes, precision);
    let meta = s.metadata();
    let hb = meta.completion_is_hb;
    let (all_approachable, n_finite) = for_all(&verdicts, |v| v.finite == Truth::True, |v| v.approachable);
    let witness = exists(&verdicts, |v| v.finite == Truth::True && v.approachable == Truth::False);
    let (all_near, _) = for_all(&verdicts, |v| v.finite == Truth::True, |v| v.nearstandard);
    let m_is_hb = meta.is_complete && hb;

    let clauses = vec![
        Clause {
            name: "all-finite-approachable",
            observed: all_approachable,
            expected: hb.then_some(true),
            details: format!("checked on {n_finite} finite probes"),
        },
        Clause {
            name: "completion-heine-borel",
            observed: Truth::from_bool(hb),
            expected: None,
            details: "declared by the space".to_string(),
        },
        Clause {
            name: "completion-equals-hull",
            observed: all_approachable,
            expected: hb.then_some(true),
            details: "every finite halo lies in the completion".to_string(),
        },
        Clause {
            name: "finite-inapproachable-witness",
            observed: Truth::from_bool(witness.is_some()),
            expected: Some(!hb),
            details: match witness {
                Some(w) => format!("{} is finite but not approachable", w.point),
                None => "none among the probes".to_string(),
            },
        },
        Clause {
            name: "corollary-all-finite-nearstandard",
            observed: all_near,
            expected: m_is_hb.then_some(true),
            details: if m_is_hb {
                "the space itself is Heine-Borel".to_string()
            } else {
                "the space itself is not Heine-Borel".to_string()
            },
        },
    ];
    let contradiction = (all_approachable == Truth::True && witness.is_some())
        || (hb && witness.is_some())
        || monotone_violations(&verdicts) > 0;
    finish("theorem-b", s.id(), meta, verdicts, clauses, contradiction)
}

fn finish(
    check: &'static str,
    space: SpaceId,
    metadata: SpaceMeta,
    probes: Vec<ProbeVerdict>,
    clauses: Vec<Clause>,
    contradiction: bool,
) -> HarnessReport {
    let passed = !contradiction && clauses.iter().all(Clause::satisfied);
    HarnessReport {
        check,
        space,
        metadata,
        unknown_verdicts: unknown_count(&probes),
        probes,
        clauses,
        contradiction,
        passed,
    }
}
