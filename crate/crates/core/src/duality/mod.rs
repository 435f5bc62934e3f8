//! Local maximum stable sets of `G` versus those of its line graph `L(G)`.
//!
//! A matching of `G` is a stable set of `L(G)`. The checks here take every
//! `S ∈ Ψ(G)` whose closed neighborhood `H = G[N[S]]` is König-Egerváry and
//! every maximum matching `M` of `H`, and ask
//!
//! * whether `M` is a local maximum stable set of `L(G)`
//!   ([`verify_theorem2`]);
//! * whether `M` extends to a maximum matching of `G`
//!   ([`verify_corollary1`]).
//!
//! [`converse_witnesses`] runs the other direction: starting from members
//! of `Ψ(L(G))` it looks for an `S` explaining them. [`open_question_probe`]
//! records whether `G` and `L(G)` have proper local maximum stable sets.

pub mod fixtures;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::kec::inside_cut;
use crate::matching::{
    least_maximum_within, matching_number, maximum_matchings_within, mu_of, parse_matching_spec,
    Matching,
};
use crate::report::{Check, Instance, Neighborhood, Outcome, VerificationReport};
use crate::stability::{
    alpha_of, enumerate_psi, extend_to_maximum_stable, has_proper_lmss, is_lmss_bits,
    is_local_maximum_stable, is_stable, stability_number,
};

/// `S ∈ Ψ(G)` with the data of its closed neighborhood.
struct LocalSet {
    set: VertexSet,
    closed: Bits,
    mu: usize,
    koenig_egervary: bool,
    matchings: Vec<EdgeSet>,
}

impl LocalSet {
    fn summary(&self, g: &Graph) -> Neighborhood {
        Neighborhood {
            vertices: g.vertex_names(&VertexSet::from_bits(&self.closed)),
            alpha: self.set.len(),
            mu: self.mu,
            koenig_egervary: self.koenig_egervary,
        }
    }
}

/// Ψ(G) in name order, each with `H = G[N[S]]`, `μ(H)`, whether `H` is KE
/// and every maximum matching of `H` in edge-id order.
fn local_sets(g: &Graph) -> Vec<LocalSet> {
    enumerate_psi(g, None)
        .sets
        .into_iter()
        .map(|set| {
            let closed = g.neighborhood_bits(&set.to_bits(g.vertex_count()), true);
            let mu = mu_of(g, &closed);
            // S is maximum in H, so α(H) = |S|
            let koenig_egervary = set.len() + mu == closed.count();
            let matchings = maximum_matchings_within(g, &closed);
            LocalSet {
                set,
                closed,
                mu,
                koenig_egervary,
                matchings,
            }
        })
        .collect()
}

/// For every `S ∈ Ψ(G)` with `G[N[S]]` König-Egerváry and every maximum
/// matching `M` of `G[N[S]]`: is `M` a local maximum stable set of `L(G)`?
///
/// The instance list holds exactly the hypothesis-satisfying pairs; a
/// graph without any is `not_applicable`. When `N[S]` has no edges the
/// only maximum matching is empty, which is never a member of Ψ(L(G));
/// such pairs are informational.
pub fn verify_theorem2(g: &Graph) -> VerificationReport {
    let (line, map) = g.line_graph();
    let mut instances = Vec::new();
    for local in local_sets(g).iter().filter(|l| l.koenig_egervary) {
        for m in &local.matchings {
            let image = map.image(m).to_bits(line.vertex_count());
            let (outcome, note) = if m.is_empty() {
                (Outcome::Info, Some("N[S] has no edges, so M is empty".into()))
            } else if is_lmss_bits(&line, &image) {
                (Outcome::Pass, None)
            } else {
                (
                    Outcome::Fail,
                    Some("matching is not local maximum stable in L(G)".into()),
                )
            };
            instances.push(Instance {
                set: g.vertex_names(&local.set),
                neighborhood: Some(local.summary(g)),
                matching: g.edge_names(m),
                outcome,
                witness: None,
                note,
            });
        }
    }
    VerificationReport::from_instances(to_graph6(g), Check::Theorem2, instances)
}

/// Same pairs as [`verify_theorem2`], asking for a maximum matching of `G`
/// that contains `M`; the lexicographically least one is the witness.
///
/// Pairs whose neighborhood is not König-Egerváry and whose matching does
/// not extend are kept as informational instances.
pub fn verify_corollary1(g: &Graph) -> VerificationReport {
    let everything = Bits::full(g.vertex_count());
    let mut instances = Vec::new();
    for local in local_sets(g) {
        for m in &local.matchings {
            let extension = least_maximum_within(g, &everything, m);
            let outcome = match (local.koenig_egervary, &extension) {
                (true, Some(_)) => Outcome::Pass,
                (true, None) => Outcome::Fail,
                (false, None) => Outcome::Info,
                (false, Some(_)) => continue,
            };
            let note = match outcome {
                Outcome::Fail => Some("no maximum matching of G contains M".to_string()),
                Outcome::Info => Some(
                    "N[S] is not Koenig-Egervary and no maximum matching of G contains M"
                        .to_string(),
                ),
                Outcome::Pass => None,
            };
            instances.push(Instance {
                set: g.vertex_names(&local.set),
                neighborhood: Some(local.summary(g)),
                matching: g.edge_names(m),
                outcome,
                witness: extension.map(|e| g.edge_names(&e)),
                note,
            });
        }
    }
    VerificationReport::from_instances(to_graph6(g), Check::Corollary1, instances)
}

/// Every `S ∈ Ψ(G)` against its least maximum stable superset.
pub fn verify_nt_extension(g: &Graph) -> VerificationReport {
    let (alpha, _) = stability_number(g);
    let mut instances = Vec::new();
    for s in enumerate_psi(g, None).sets {
        let extension = extend_to_maximum_stable(g, &s).ok();
        let ok = extension.as_ref().is_some_and(|big| {
            s.is_subset(big) && big.len() == alpha && is_stable(g, big).unwrap_or(false)
        });
        instances.push(Instance {
            set: g.vertex_names(&s),
            neighborhood: None,
            matching: Vec::new(),
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            witness: extension.map(|big| g.vertex_names(&big)),
            note: (!ok).then(|| "no maximum stable set contains S".into()),
        });
    }
    VerificationReport::from_instances(to_graph6(g), Check::NtExtension, instances)
}

/// A matching whose image is a local maximum stable set of `L(G)`, with
/// the first `S ∈ Ψ(G)` (in name order) such that `G[N[S]]` is
/// König-Egerváry and the matching is maximum in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConverseWitness {
    pub matching: Matching,
    pub witnessing_set: Option<VertexSet>,
}

/// One entry per member of `Ψ(L(G))`, ordered by edge ids. Entries without
/// a witnessing set show that the implication does not reverse on `G`.
pub fn converse_witnesses(g: &Graph) -> Vec<ConverseWitness> {
    let (line, map) = g.line_graph();
    let locals = local_sets(g);
    let mut out: Vec<ConverseWitness> = enumerate_psi(&line, None)
        .sets
        .into_iter()
        .map(|t| {
            let edges = map.preimage(&t);
            let witnessing_set = locals
                .iter()
                .find(|l| {
                    l.koenig_egervary
                        && edges.len() == l.mu
                        && edges.iter().all(|e| {
                            let (u, v) = g.edge(e);
                            l.closed.contains(u) && l.closed.contains(v)
                        })
                })
                .map(|l| l.set.clone());
            ConverseWitness {
                matching: Matching::new(g, edges).expect("stable sets of L(G) are matchings"),
                witnessing_set,
            }
        })
        .collect();
    out.sort_by(|a, b| a.matching.edges().cmp(b.matching.edges()));
    out
}

/// Whether `G` and `L(G)` have proper local maximum stable sets (members of
/// Ψ − Ω), with the first witness of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenQuestionProbe {
    pub graph_witness: Option<VertexSet>,
    /// A vertex set of `L(G)`, i.e. edge ids of `G`.
    pub line_graph_witness: Option<VertexSet>,
}

impl OpenQuestionProbe {
    pub fn graph_has_proper(&self) -> bool {
        self.graph_witness.is_some()
    }

    pub fn line_graph_has_proper(&self) -> bool {
        self.line_graph_witness.is_some()
    }

    /// `L(G)` has no proper local maximum stable set while `G` does.
    pub fn is_candidate(&self) -> bool {
        self.graph_has_proper() && !self.line_graph_has_proper()
    }
}

pub fn open_question_probe(g: &Graph) -> Result<OpenQuestionProbe> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (line, _) = g.line_graph();
    Ok(OpenQuestionProbe {
        graph_witness: has_proper_lmss(g),
        line_graph_witness: has_proper_lmss(&line),
    })
}

/// A graph where `L(G)` has no proper local maximum stable set but `G`
/// has one, with everything needed to re-verify that by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRecord {
    pub graph6: String,
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub alpha: usize,
    /// Member of Ψ(G) − Ω(G).
    pub proper_set: Vec<String>,
    pub line_graph_alpha: usize,
    pub line_graph_psi: usize,
    pub line_graph_omega: usize,
}

impl CandidateRecord {
    pub fn build(g: &Graph, probe: &OpenQuestionProbe) -> Option<CandidateRecord> {
        if !probe.is_candidate() {
            return None;
        }
        let (line, _) = g.line_graph();
        let line_alpha = alpha_of(&line, &Bits::full(line.vertex_count()));
        let line_psi = enumerate_psi(&line, None);
        let line_omega = line_psi.iter().filter(|s| s.len() == line_alpha).count();
        Some(CandidateRecord {
            graph6: to_graph6(g),
            vertices: g.names().to_vec(),
            edges: g.edge_names(&(0..g.edge_count()).collect()),
            alpha: stability_number(g).0,
            proper_set: g.vertex_names(probe.graph_witness.as_ref()?),
            line_graph_alpha: line_alpha,
            line_graph_psi: line_psi.len(),
            line_graph_omega: line_omega,
        })
    }

    /// Recomputes every claim from the stored edge list.
    pub fn recheck(&self) -> std::result::Result<(), String> {
        let pairs: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|e| e.split_once('-').ok_or_else(|| format!("bad edge `{e}`")))
            .collect::<std::result::Result<_, _>>()?;
        let names: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let g = Graph::build(&names, &pairs).map_err(|e| e.to_string())?;
        if to_graph6(&g) != self.graph6 {
            return Err("edge list does not match graph6".into());
        }
        let s = g.vertex_set(&self.proper_set).map_err(|e| e.to_string())?;
        let alpha = stability_number(&g).0;
        if alpha != self.alpha || s.len() >= alpha {
            return Err("proper set is not smaller than alpha".into());
        }
        if !is_local_maximum_stable(&g, &s).map_err(|e| e.to_string())? {
            return Err("proper set is not local maximum stable".into());
        }
        let probe = open_question_probe(&g).map_err(|e| e.to_string())?;
        if probe.line_graph_has_proper() || self.line_graph_psi != self.line_graph_omega {
            return Err("line graph has a proper local maximum stable set".into());
        }
        Ok(())
    }
}

/// Re-derives every instance of `report` from its recorded fields and `g`.
pub fn recheck(g: &Graph, report: &VerificationReport) -> std::result::Result<(), String> {
    if !report.is_consistent() {
        return Err("violations and status disagree with instance outcomes".into());
    }
    let (alpha, _) = stability_number(g);
    let mu = matching_number(g);
    for (i, inst) in report.instances.iter().enumerate() {
        let fail = |msg: &str| Err(format!("instance {i}: {msg}"));
        let s = g.vertex_set(&inst.set).map_err(|e| e.to_string())?;
        let m = parse_matching_spec(g, &inst.matching.join(",")).map_err(|e| e.to_string())?;
        if Matching::new(g, m.clone()).is_err() {
            return fail("recorded matching is not a matching");
        }
        match report.check {
            Check::Theorem2 | Check::Corollary1 => {
                if !is_local_maximum_stable(g, &s).map_err(|e| e.to_string())? {
                    return fail("S is not local maximum stable");
                }
                let closed = g.neighborhood(&s, true).map_err(|e| e.to_string())?;
                let (h, map) = g.induced_subgraph(&closed).map_err(|e| e.to_string())?;
                let h_alpha = stability_number(&h).0;
                let h_mu = matching_number(&h);
                let summary = Neighborhood {
                    vertices: g.vertex_names(&closed),
                    alpha: h_alpha,
                    mu: h_mu,
                    koenig_egervary: h_alpha + h_mu == h.vertex_count(),
                };
                if inst.neighborhood.as_ref() != Some(&summary) {
                    return fail("neighborhood summary does not match");
                }
                let in_h = m.iter().all(|e| {
                    let (u, v) = g.edge(e);
                    map[u].is_some() && map[v].is_some()
                });
                if !in_h || m.len() != h_mu {
                    return fail("M is not a maximum matching of G[N[S]]");
                }
                if report.check == Check::Theorem2 {
                    if !summary.koenig_egervary {
                        return fail("hypothesis does not hold");
                    }
                    let (line, lmap) = g.line_graph();
                    let ok = is_local_maximum_stable(&line, &lmap.image(&m))
                        .map_err(|e| e.to_string())?;
                    if m.is_empty() != (inst.outcome == Outcome::Info) {
                        return fail("only empty matchings are informational");
                    }
                    if !m.is_empty() && ok != (inst.outcome == Outcome::Pass) {
                        return fail("outcome disagrees with L(G)");
                    }
                } else {
                    match (&inst.witness, inst.outcome) {
                        (Some(w), Outcome::Pass) => {
                            let m0 = parse_matching_spec(g, &w.join(","))
                                .map_err(|e| e.to_string())?;
                            if Matching::new(g, m0.clone()).is_err()
                                || m0.len() != mu
                                || !m.is_subset(&m0)
                            {
                                return fail("witness is not a maximum matching containing M");
                            }
                        }
                        (None, Outcome::Fail | Outcome::Info) => {
                            let extends = least_maximum_within(g, &Bits::full(g.vertex_count()), &m);
                            if extends.is_some() {
                                return fail("M does extend");
                            }
                            if (inst.outcome == Outcome::Info) == summary.koenig_egervary {
                                return fail("informational flag disagrees with hypothesis");
                            }
                        }
                        _ => return fail("witness and outcome disagree"),
                    }
                }
            }
            Check::LemmaMatch => {
                if !is_stable(g, &s).unwrap_or(false) || s.len() != alpha || m.len() != mu {
                    return fail("S or M is not maximum");
                }
                let holds = inside_cut(g, &s, &m) && m.len() == g.vertex_count() - s.len();
                if holds != (inst.outcome == Outcome::Pass) {
                    return fail("outcome disagrees with the cut test");
                }
            }
            Check::NtExtension => {
                if !is_local_maximum_stable(g, &s).map_err(|e| e.to_string())? {
                    return fail("S is not local maximum stable");
                }
                let ok = match &inst.witness {
                    Some(w) => {
                        let big = g.vertex_set(w).map_err(|e| e.to_string())?;
                        is_stable(g, &big).unwrap_or(false) && big.len() == alpha && s.is_subset(&big)
                    }
                    None => false,
                };
                if ok != (inst.outcome == Outcome::Pass) {
                    return fail("witness does not certify the outcome");
                }
            }
            Check::OpenQuestion => {}
        }
    }
    Ok(())
}
