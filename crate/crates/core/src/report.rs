//! Structured outcomes of checks run against a single graph.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Maximum matchings of a local KE neighborhood are local maximum
    /// stable sets of the line graph.
    Theorem2,
    /// Such matchings extend to maximum matchings of the whole graph.
    Corollary1,
    /// Maximum matchings of a KE graph live in every cut `(S, V − S)`.
    LemmaMatch,
    /// Local maximum stable sets extend to maximum stable sets.
    NtExtension,
    OpenQuestion,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Theorem2,
        Check::Corollary1,
        Check::LemmaMatch,
        Check::NtExtension,
        Check::OpenQuestion,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Theorem2 => "theorem2",
            Check::Corollary1 => "corollary1",
            Check::LemmaMatch => "lemma_match",
            Check::NtExtension => "nt_extension",
            Check::OpenQuestion => "open_question",
        }
    }

    /// Accepts both the scan spelling (`lemma_match`) and the short CLI
    /// spelling (`lemma-match`, `nt`).
    pub fn parse(name: &str) -> Option<Check> {
        match name {
            "theorem2" => Some(Check::Theorem2),
            "corollary1" => Some(Check::Corollary1),
            "lemma_match" | "lemma-match" => Some(Check::LemmaMatch),
            "nt_extension" | "nt-extension" | "nt" => Some(Check::NtExtension),
            "open_question" | "open-question" => Some(Check::OpenQuestion),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// Recorded for context only, never counted as a violation.
    Info,
}

/// The subgraph `H = G[N[S]]` an instance was checked in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Neighborhood {
    pub vertices: Vec<String>,
    pub alpha: usize,
    pub mu: usize,
    pub koenig_egervary: bool,
}

/// One `(S, M)` pair examined by a check. Sets are sorted name arrays and
/// edges are written `u-v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub set: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighborhood: Option<Neighborhood>,
    pub matching: Vec<String>,
    pub outcome: Outcome,
    /// A maximum matching containing `matching`, or a maximum stable set
    /// containing `set`, depending on the check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graph: String,
    pub check: Check,
    pub status: Status,
    pub instances: Vec<Instance>,
    pub violations: Vec<Instance>,
}

impl VerificationReport {
    /// Derives `violations` and the status from the instance outcomes. With
    /// nothing to check the status is `not_applicable`.
    pub fn from_instances(graph: String, check: Check, instances: Vec<Instance>) -> Self {
        let violations: Vec<Instance> = instances
            .iter()
            .filter(|i| i.outcome == Outcome::Fail)
            .cloned()
            .collect();
        let checked = instances.iter().any(|i| i.outcome != Outcome::Info);
        let status = if !violations.is_empty() {
            Status::Fail
        } else if checked {
            Status::Pass
        } else {
            Status::NotApplicable
        };
        VerificationReport {
            graph,
            check,
            status,
            instances,
            violations,
        }
    }

    /// Structural consistency: violations are exactly the failed
    /// instances and the status agrees with them.
    pub fn is_consistent(&self) -> bool {
        let failed: Vec<&Instance> = self
            .instances
            .iter()
            .filter(|i| i.outcome == Outcome::Fail)
            .collect();
        let listed: Vec<&Instance> = self.violations.iter().collect();
        failed == listed && (self.status == Status::Fail) == !failed.is_empty()
    }
}
