//! Verdicts and the reasoning traces that justify them.
//!
//! Every decision procedure in this crate returns a [`Verdict`]: an outcome
//! plus a nonempty trace of rule applications. Substantive rules carry a
//! citation explaining why they are sound; glue steps (input echoes, derived
//! dimensions, delegation notes) are marked as plumbing so a reader can tell
//! argument from bookkeeping.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

/// Answer to "is this map loose (deformable away from itself)?".
/// `Unknown` means the implemented criteria do not decide the case; it is
/// never a euphemism for `NotLoose`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Loose,
    NotLoose,
    Unknown,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Loose => "Loose",
            Outcome::NotLoose => "NotLoose",
            Outcome::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Identifier of a decision rule or plumbing step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleId {
    /// k = 1: frames are unit vectors, the frame space is a sphere.
    #[serde(rename = "stiefel/k1")]
    StiefelK1,
    /// The pulled-back tangent bundle of the Grassmannian has a nowhere-zero
    /// section (k = r-1, or k odd with r even).
    #[serde(rename = "stiefel/tangent-section")]
    StiefelTangentSection,
    /// The isolated pair (r, k) = (9, 5), settled by factoring the fibre
    /// through S^4.
    #[serde(rename = "stiefel/pair-9-5")]
    StiefelPair95,
    /// chi of the base vanishes, so the obstruction does.
    #[serde(rename = "stiefel/euler-zero")]
    StiefelEulerZero,
    /// Push the obstruction to a point and test 2*chi against the order of
    /// the invariantly framed SO(k).
    #[serde(rename = "stiefel/order-test")]
    StiefelOrderTest,
    /// Looseness criterion for oriented plane bundles.
    #[serde(rename = "bundle/plane-criterion")]
    BundlePlaneCriterion,
    /// Tensor powers of the canonical line bundle over complex projective
    /// space, reduced to the plane-bundle criterion.
    #[serde(rename = "bundle/cp-tensor")]
    BundleCpTensor,
    /// 1-dimensional targets always admit a nowhere-zero field.
    #[serde(rename = "sphere/circle-target")]
    SphereCircleTarget,
    /// Nonzero obstruction class: the map cannot be pushed off itself.
    #[serde(rename = "sphere/obstruction-nonzero")]
    SphereObstructionNonzero,
    /// Vanishing obstruction inside the stable range m < 2n-2 is conclusive.
    #[serde(rename = "sphere/kernel-stable")]
    SphereKernelStable,
    /// Vanishing obstruction outside the stable range decides nothing.
    #[serde(rename = "sphere/outside-stable-range")]
    SphereOutsideStableRange,
    /// Derived dimensions and Euler characteristic for a frame bundle.
    #[serde(rename = "plumbing/dims")]
    PlumbingDims,
    /// Echo of the input the decision ran on.
    #[serde(rename = "plumbing/input")]
    PlumbingInput,
    /// Hand-off from one decision procedure to another.
    #[serde(rename = "plumbing/delegation")]
    PlumbingDelegation,
    /// Caveat emitted when the query sits beyond the stable range.
    #[serde(rename = "plumbing/unstable-note")]
    PlumbingUnstableNote,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::StiefelK1 => "stiefel/k1",
            RuleId::StiefelTangentSection => "stiefel/tangent-section",
            RuleId::StiefelPair95 => "stiefel/pair-9-5",
            RuleId::StiefelEulerZero => "stiefel/euler-zero",
            RuleId::StiefelOrderTest => "stiefel/order-test",
            RuleId::BundlePlaneCriterion => "bundle/plane-criterion",
            RuleId::BundleCpTensor => "bundle/cp-tensor",
            RuleId::SphereCircleTarget => "sphere/circle-target",
            RuleId::SphereObstructionNonzero => "sphere/obstruction-nonzero",
            RuleId::SphereKernelStable => "sphere/kernel-stable",
            RuleId::SphereOutsideStableRange => "sphere/outside-stable-range",
            RuleId::PlumbingDims => "plumbing/dims",
            RuleId::PlumbingInput => "plumbing/input",
            RuleId::PlumbingDelegation => "plumbing/delegation",
            RuleId::PlumbingUnstableNote => "plumbing/unstable-note",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One step of a reasoning trace: which rule fired, why it is sound, and the
/// intermediate values it computed. `computed` keeps insertion order so the
/// JSON encoding is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    pub rule: RuleId,
    pub plumbing: bool,
    pub citation: String,
    pub computed: IndexMap<String, String>,
}

impl RuleApplication {
    /// A substantive rule; the citation must say why it decides.
    pub fn cited(rule: RuleId, citation: impl Into<String>) -> Self {
        let citation = citation.into();
        assert!(!citation.is_empty(), "substantive rules must carry a citation");
        RuleApplication { rule, plumbing: false, citation, computed: IndexMap::new() }
    }

    /// A bookkeeping step (input echo, derived quantities, delegation).
    pub fn note(rule: RuleId, text: impl Into<String>) -> Self {
        RuleApplication { rule, plumbing: true, citation: text.into(), computed: IndexMap::new() }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.computed.insert(key.into(), value.to_string());
        self
    }
}

/// Outcome plus the trace that produced it. The trace is never empty and its
/// last entry is the rule that fixed the outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub trace: Vec<RuleApplication>,
}

impl Verdict {
    pub fn new(outcome: Outcome, trace: Vec<RuleApplication>) -> Self {
        assert!(!trace.is_empty(), "a verdict must explain itself");
        Verdict { outcome, trace }
    }

    /// The rule that fixed the outcome.
    pub fn deciding_rule(&self) -> &RuleApplication {
        self.trace.last().expect("traces are nonempty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deciding_rule_is_the_last_entry() {
        let v = Verdict::new(
            Outcome::Loose,
            vec![
                RuleApplication::note(RuleId::PlumbingDims, "setup"),
                RuleApplication::cited(RuleId::StiefelK1, "spheres of odd dimension"),
            ],
        );
        assert_eq!(v.deciding_rule().rule, RuleId::StiefelK1);
    }

    #[test]
    #[should_panic(expected = "explain itself")]
    fn empty_traces_are_rejected() {
        let _ = Verdict::new(Outcome::Unknown, Vec::new());
    }

    #[test]
    #[should_panic(expected = "citation")]
    fn cited_rules_need_nonempty_citations() {
        let _ = RuleApplication::cited(RuleId::StiefelK1, "");
    }

    #[test]
    fn rule_ids_round_trip_through_serde() {
        for rule in [
            RuleId::StiefelK1,
            RuleId::StiefelTangentSection,
            RuleId::StiefelPair95,
            RuleId::StiefelEulerZero,
            RuleId::StiefelOrderTest,
            RuleId::BundlePlaneCriterion,
            RuleId::BundleCpTensor,
            RuleId::SphereCircleTarget,
            RuleId::SphereObstructionNonzero,
            RuleId::SphereKernelStable,
            RuleId::SphereOutsideStableRange,
            RuleId::PlumbingDims,
            RuleId::PlumbingInput,
            RuleId::PlumbingDelegation,
            RuleId::PlumbingUnstableNote,
        ] {
            let json = serde_json::to_string(&rule).unwrap();
            assert_eq!(json, format!("\"{}\"", rule.as_str()));
            let back: RuleId = serde_json::from_str(&json).unwrap();
            assert_eq!(back, rule);
        }
    }
}
