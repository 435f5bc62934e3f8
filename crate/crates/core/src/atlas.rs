//! Connected graphs up to isomorphism, and scans that run checks over them.
//!
//! Every connected graph on `n ≥ 2` vertices has a vertex whose removal
//! leaves it connected (an end of a longest path, say), so joining a new
//! vertex to a non-empty subset of each connected `(n−1)`-vertex
//! representative reaches every class. Duplicates are removed by canonical
//! certificate and each class is represented by its canonical form.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_string};
use crate::duality::{
    open_question_probe, verify_corollary1, verify_nt_extension, verify_theorem2, CandidateRecord,
};
use crate::error::{Error, Result};
use crate::format::{read_graph6, to_graph6};
use crate::graph::Graph;
use crate::kec::verify_matching_cut_lemma;
use crate::report::{Check, Status, VerificationReport};

pub const MAX_BUILTIN_ORDER: usize = 8;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, sorted by certificate. Vertices are named `0..n`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_up_to(n)?.pop().unwrap_or_default())
}

/// Element `k` holds the connected graphs on `k + 1` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n > MAX_BUILTIN_ORDER {
        return Err(Error::TooLarge {
            n: max_n,
            max: MAX_BUILTIN_ORDER,
        });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    for n in 1..=max_n {
        let next = match levels.last() {
            None => vec![Graph::numbered(1, &[]).expect("single vertex")],
            Some(prev) => extend_level(prev, n),
        };
        levels.push(next);
    }
    Ok(levels)
}

fn extend_level(prev: &[Graph], n: usize) -> Vec<Graph> {
    let new = n - 1;
    let found: Vec<(String, Graph)> = prev
        .par_iter()
        .flat_map_iter(|base| {
            (1u32..1 << new).map(move |mask| {
                let mut pairs = base.edges().to_vec();
                pairs.extend((0..new).filter(|v| mask >> v & 1 == 1).map(|v| (v, new)));
                let g = Graph::numbered(n, &pairs).expect("extension stays simple");
                let form = canonical_form(&g).expect("orders up to 8 are always canonizable");
                (to_graph6(&form), form)
            })
        })
        .collect();
    let classes: BTreeMap<String, Graph> = found.into_iter().collect();
    classes.into_values().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin,
    /// Contents of a graph6 stream, one record per line.
    Graph6Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    /// Largest order generated; for a graph6 stream, larger graphs are
    /// skipped.
    pub max_n: usize,
    pub checks: Vec<Check>,
    pub source: Source,
    pub jobs: usize,
}

impl ScanConfig {
    pub fn builtin(max_n: usize, checks: &[Check], jobs: usize) -> Self {
        ScanConfig {
            max_n,
            checks: checks.to_vec(),
            source: Source::Builtin,
            jobs,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            return Err(Error::InvalidConfig("no checks selected".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidConfig("worker count must be positive".into()));
        }
        if self.source == Source::Builtin && !(1..=MAX_BUILTIN_ORDER).contains(&self.max_n) {
            return Err(Error::InvalidConfig(format!(
                "builtin generation needs 1 <= max_n <= {MAX_BUILTIN_ORDER}, got {}",
                self.max_n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub check: Check,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    /// Open question only: graphs with a proper local maximum stable set
    /// whose line graph has none.
    pub candidates: usize,
}

/// Graphs of one order split by which of `G`, `L(G)` has a proper local
/// maximum stable set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenQuestionRow {
    pub n: usize,
    pub graphs: usize,
    pub neither: usize,
    pub graph_only: usize,
    pub line_graph_only: usize,
    pub both: usize,
    pub disconnected: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenQuestionTable {
    pub rows: Vec<OpenQuestionRow>,
    pub candidates: Vec<CandidateRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub graphs_processed: usize,
    /// Streamed graphs above `max_n`.
    pub skipped: usize,
    pub checks: Vec<CheckCounts>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub open_question: Option<OpenQuestionTable>,
    pub violations: Vec<VerificationReport>,
    /// The violating report on the smallest graph, first by certificate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<VerificationReport>,
}

impl ScanSummary {
    pub fn counts(&self, check: Check) -> Option<&CheckCounts> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }
}

/// What one worker computes for one graph.
struct GraphOutcome {
    n: usize,
    key: String,
    reports: Vec<VerificationReport>,
    probe: Option<ProbeOutcome>,
}

enum ProbeOutcome {
    Disconnected,
    Probed {
        graph: bool,
        line_graph: bool,
        record: Option<CandidateRecord>,
    },
}

fn examine(g: &Graph, checks: &[Check]) -> GraphOutcome {
    let key = canonical_string(g).unwrap_or_else(|_| to_graph6(g));
    let mut reports = Vec::new();
    let mut probe = None;
    for &check in checks {
        match check {
            Check::Theorem2 => reports.push(verify_theorem2(g)),
            Check::Corollary1 => reports.push(verify_corollary1(g)),
            Check::LemmaMatch => reports.push(verify_matching_cut_lemma(g)),
            Check::NtExtension => reports.push(verify_nt_extension(g)),
            Check::OpenQuestion => {
                probe = Some(match open_question_probe(g) {
                    Err(_) => ProbeOutcome::Disconnected,
                    Ok(p) => ProbeOutcome::Probed {
                        graph: p.graph_has_proper(),
                        line_graph: p.line_graph_has_proper(),
                        record: CandidateRecord::build(g, &p),
                    },
                })
            }
        }
    }
    GraphOutcome {
        n: g.vertex_count(),
        key,
        reports,
        probe,
    }
}

/// Runs the selected checks over every graph of the configured source.
///
/// All graphs are examined even after a violation; the summary lists every
/// violating report and singles out the smallest as the counterexample.
/// Output depends only on the configuration, not on `jobs`.
pub fn scan(config: &ScanConfig) -> Result<ScanSummary> {
    config.validate()?;
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;

    let (graphs, skipped) = match &config.source {
        Source::Builtin => {
            let levels = pool.install(|| connected_graphs_up_to(config.max_n))?;
            (levels.into_iter().flatten().collect::<Vec<_>>(), 0)
        }
        Source::Graph6Text(text) => {
            let all = read_graph6(text.as_bytes()).collect::<Result<Vec<_>>>()?;
            let total = all.len();
            let kept: Vec<Graph> = all
                .into_iter()
                .filter(|g| g.vertex_count() <= config.max_n)
                .collect();
            let skipped = total - kept.len();
            (kept, skipped)
        }
    };

    let mut outcomes: Vec<GraphOutcome> =
        pool.install(|| graphs.par_iter().map(|g| examine(g, &checks)).collect());
    outcomes.sort_by(|a, b| (a.n, &a.key).cmp(&(b.n, &b.key)));

    let mut counts: Vec<CheckCounts> = checks
        .iter()
        .map(|&check| CheckCounts {
            check,
            pass: 0,
            fail: 0,
            not_applicable: 0,
            candidates: 0,
        })
        .collect();
    let mut violations = Vec::new();
    let mut rows: BTreeMap<usize, OpenQuestionRow> = BTreeMap::new();
    let mut candidates = Vec::new();

    for outcome in outcomes {
        for report in outcome.reports {
            let c = counts
                .iter_mut()
                .find(|c| c.check == report.check)
                .expect("every report has a counter");
            match report.status {
                Status::Pass => c.pass += 1,
                Status::NotApplicable => c.not_applicable += 1,
                Status::Fail => {
                    c.fail += 1;
                    violations.push(report);
                }
            }
        }
        if let Some(probe) = outcome.probe {
            let c = counts
                .iter_mut()
                .find(|c| c.check == Check::OpenQuestion)
                .expect("probe implies the open question was selected");
            let row = rows.entry(outcome.n).or_insert_with(|| OpenQuestionRow {
                n: outcome.n,
                ..OpenQuestionRow::default()
            });
            row.graphs += 1;
            match probe {
                ProbeOutcome::Disconnected => {
                    row.disconnected += 1;
                    c.not_applicable += 1;
                }
                ProbeOutcome::Probed {
                    graph,
                    line_graph,
                    record,
                } => {
                    match (graph, line_graph) {
                        (false, false) => row.neither += 1,
                        (true, false) => row.graph_only += 1,
                        (false, true) => row.line_graph_only += 1,
                        (true, true) => row.both += 1,
                    }
                    match record {
                        Some(r) => {
                            c.candidates += 1;
                            candidates.push(r);
                        }
                        None => c.pass += 1,
                    }
                }
            }
        }
    }

    let graphs_processed = graphs.len();
    let open_question = checks.contains(&Check::OpenQuestion).then(|| OpenQuestionTable {
        rows: rows.into_values().collect(),
        candidates,
    });
    Ok(ScanSummary {
        graphs_processed,
        skipped,
        checks: counts,
        open_question,
        counterexample: violations.first().cloned(),
        violations,
    })
}
