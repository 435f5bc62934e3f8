//! König-Egerváry graphs: `α(G) + μ(G) = |V(G)|`.
//!
//! For any stable set `S` and matching `M`, `|S| + |M| ≤ α(G) + μ(G) ≤ |V|`,
//! so a pair with `|S| + |M| = |V|` certifies at once that `S` is maximum,
//! `M` is maximum and the graph is König-Egerváry.

use crate::format::to_graph6;
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::matching::{enumerate_maximum_matchings, maximum_matching, Matching};
use crate::report::{Check, Instance, Outcome, Status, VerificationReport};
use crate::stability::{enumerate_maximum_stable_sets, is_stable, stability_number};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeCertificate {
    pub stable: VertexSet,
    pub matching: Matching,
    pub vertex_count: usize,
}

impl KeCertificate {
    /// Checks the certificate against `g` without any optimisation:
    /// stability, disjointness and the size identity.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        is_stable(g, &self.stable).unwrap_or(false)
            && Matching::new(g, self.matching.edges().clone()).is_ok()
            && self.vertex_count == g.vertex_count()
            && self.stable.len() + self.matching.len() == g.vertex_count()
    }
}

/// A certificate built from the lexicographically least maximum matching
/// and maximum stable set, or `None` when `α + μ < |V|`.
pub fn is_koenig_egervary(g: &Graph) -> Option<KeCertificate> {
    let matching = maximum_matching(g);
    let (_, stable) = stability_number(g);
    let cert = KeCertificate {
        stable,
        matching,
        vertex_count: g.vertex_count(),
    };
    if cert.stable.len() + cert.matching.len() != g.vertex_count() {
        return None;
    }
    assert!(cert.is_valid_for(g), "certificate construction is broken");
    Some(cert)
}

/// Whether every edge of `m` has exactly one endpoint in `s`.
pub(crate) fn inside_cut(g: &Graph, s: &VertexSet, m: &EdgeSet) -> bool {
    m.iter().all(|e| {
        let (u, v) = g.edge(e);
        s.contains(u) != s.contains(v)
    })
}

/// For a KE graph: every maximum matching lies in `(S, V − S)` and has
/// `|V − S|` edges, for every maximum stable set `S`. Each `(S, M)` pair
/// becomes an instance.
///
/// A non-KE graph gives a `not_applicable` report whose informational
/// instances are the pairs where the conclusion fails.
pub fn verify_matching_cut_lemma(g: &Graph) -> VerificationReport {
    let ke = is_koenig_egervary(g).is_some();
    let omega = enumerate_maximum_stable_sets(g);
    let matchings = enumerate_maximum_matchings(g);
    let n = g.vertex_count();
    let mut instances = Vec::new();
    for s in omega.iter() {
        for m in &matchings {
            let inside = inside_cut(g, s, m.edges());
            let sized = m.len() == n - s.len();
            let holds = inside && sized;
            let outcome = match (ke, holds) {
                (true, true) => Outcome::Pass,
                (true, false) => Outcome::Fail,
                (false, false) => Outcome::Info,
                (false, true) => continue,
            };
            let note = (!holds).then(|| {
                if !inside {
                    "matching leaves the cut (S, V-S)".to_string()
                } else {
                    format!("|M| = {} but |V-S| = {}", m.len(), n - s.len())
                }
            });
            instances.push(Instance {
                set: g.vertex_names(s),
                neighborhood: None,
                matching: m.to_names(g),
                outcome,
                witness: None,
                note,
            });
        }
    }
    let mut report = VerificationReport::from_instances(to_graph6(g), Check::LemmaMatch, instances);
    if !ke {
        report.status = Status::NotApplicable;
    }
    report
}
