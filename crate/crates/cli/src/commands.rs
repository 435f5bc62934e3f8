use std::fmt::Write as _;

use anyhow::{bail, Result};
use lmss::atlas::{scan, OpenQuestionTable, ScanConfig, ScanSummary, Source};
use lmss::format::{to_edge_list, to_graph6};
use lmss::kec::{is_koenig_egervary, verify_matching_cut_lemma};
use lmss::matching::{
    extendable_to_maximum, is_maximal_matching, matching_number, maximum_matching,
    parse_matching_spec,
};
use lmss::report::Check;
use lmss::stability::{enumerate_maximum_stable_sets, enumerate_psi, has_proper_lmss, stability_number};
use lmss::duality::{verify_corollary1, verify_nt_extension, verify_theorem2};
use lmss::{Graph, Status, VerificationReport};
use serde::{Deserialize, Serialize};

/// Serialized command output plus whether a check was violated.
pub struct Output<T> {
    pub results: T,
    pub violated: bool,
}

impl<T> Output<T> {
    fn clean(results: T) -> Self {
        Output {
            results,
            violated: false,
        }
    }
}

/// Prose rendering for `--human`.
pub trait Human {
    fn human(&self) -> String;
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct KeSummary {
    pub stable_set: Vec<String>,
    pub matching: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Analysis {
    pub vertices: usize,
    pub edges: usize,
    pub graph6: String,
    pub connected: bool,
    pub alpha: usize,
    pub maximum_stable_set: Vec<String>,
    pub mu: usize,
    pub maximum_matching: Vec<String>,
    pub bipartite: bool,
    pub koenig_egervary: Option<KeSummary>,
    pub omega_count: usize,
    pub psi_count: usize,
    pub proper_lmss: Option<Vec<String>>,
}

pub fn analyze(g: &Graph) -> Output<Analysis> {
    let (alpha, stable) = stability_number(g);
    let matching = maximum_matching(g);
    let ke = is_koenig_egervary(g).map(|cert| KeSummary {
        stable_set: g.vertex_names(&cert.stable),
        matching: cert.matching.to_names(g),
    });
    Output::clean(Analysis {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        graph6: to_graph6(g),
        connected: g.is_connected(),
        alpha,
        maximum_stable_set: g.vertex_names(&stable),
        mu: matching.len(),
        maximum_matching: matching.to_names(g),
        bipartite: g.is_bipartite().is_some(),
        koenig_egervary: ke,
        omega_count: enumerate_maximum_stable_sets(g).len(),
        psi_count: enumerate_psi(g, None).len(),
        proper_lmss: has_proper_lmss(g).map(|s| g.vertex_names(&s)),
    })
}

impl Human for Analysis {
    fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} vertices, {} edges ({})", self.vertices, self.edges, self.graph6);
        let _ = writeln!(out, "alpha = {}, e.g. {}", self.alpha, braces(&self.maximum_stable_set));
        let _ = writeln!(out, "mu = {}, e.g. {}", self.mu, braces(&self.maximum_matching));
        let _ = writeln!(out, "connected: {}, bipartite: {}", self.connected, self.bipartite);
        match &self.koenig_egervary {
            Some(ke) => {
                let _ = writeln!(
                    out,
                    "Koenig-Egervary: yes, stable set {} with matching {}",
                    braces(&ke.stable_set),
                    braces(&ke.matching)
                );
            }
            None => {
                let _ = writeln!(out, "Koenig-Egervary: no");
            }
        }
        let _ = writeln!(
            out,
            "{} maximum stable sets, {} local maximum stable sets",
            self.omega_count, self.psi_count
        );
        match &self.proper_lmss {
            Some(s) => {
                let _ = writeln!(out, "proper local maximum stable set: {}", braces(s));
            }
            None => {
                let _ = writeln!(out, "no proper local maximum stable set");
            }
        }
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Verification {
    pub reports: Vec<VerificationReport>,
    pub violations: usize,
}

/// Check names accepted by `verify`.
pub fn verify_check(name: &str) -> Result<Check> {
    match Check::parse(name) {
        Some(Check::OpenQuestion) => {
            bail!("open_question is not a verification; use `scan --check open_question`")
        }
        Some(check) => Ok(check),
        None => bail!("unknown check `{name}` (expected theorem2, corollary1, lemma-match or nt)"),
    }
}

pub fn verify(graphs: &[Graph], check: Check) -> Output<Verification> {
    let reports: Vec<VerificationReport> = graphs
        .iter()
        .map(|g| match check {
            Check::Theorem2 => verify_theorem2(g),
            Check::Corollary1 => verify_corollary1(g),
            Check::LemmaMatch => verify_matching_cut_lemma(g),
            Check::NtExtension => verify_nt_extension(g),
            Check::OpenQuestion => unreachable!("rejected by verify_check"),
        })
        .collect();
    let violations = reports.iter().map(|r| r.violations.len()).sum();
    Output {
        violated: reports.iter().any(|r| r.status == Status::Fail),
        results: Verification { reports, violations },
    }
}

impl Human for Verification {
    fn human(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::NotApplicable => "not applicable",
            };
            let _ = writeln!(
                out,
                "{} on {}: {status}, {} instances",
                r.check.as_str(),
                r.graph,
                r.instances.len()
            );
            for v in &r.violations {
                let _ = writeln!(
                    out,
                    "  violation: S = {}, M = {}{}",
                    braces(&v.set),
                    braces(&v.matching),
                    v.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default()
                );
            }
        }
        let _ = writeln!(out, "{} violations", self.violations);
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Extension {
    pub matching: Vec<String>,
    pub maximal: bool,
    pub mu: usize,
    pub extendable: bool,
    pub extension: Option<Vec<String>>,
}

pub fn extend_matching(g: &Graph, spec: &str) -> Result<Output<Extension>> {
    let m = parse_matching_spec(g, spec)?;
    let extension = extendable_to_maximum(g, &m)?;
    Ok(Output::clean(Extension {
        matching: g.edge_names(&m),
        maximal: is_maximal_matching(g, &m)?,
        mu: matching_number(g),
        extendable: extension.is_some(),
        extension: extension.map(|e| e.to_names(g)),
    }))
}

impl Human for Extension {
    fn human(&self) -> String {
        let kind = if self.matching.len() == self.mu {
            "maximum"
        } else if self.maximal {
            "maximal"
        } else {
            "non-maximal"
        };
        match &self.extension {
            Some(e) => format!(
                "{} is a {kind} matching; it extends to the maximum matching {} (mu = {})\n",
                braces(&self.matching),
                braces(e),
                self.mu
            ),
            None => format!(
                "{} is a {kind} matching; no maximum matching (mu = {}) contains it\n",
                braces(&self.matching),
                self.mu
            ),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LineGraphEdge {
    pub vertex: String,
    pub endpoints: [String; 2],
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LineGraph {
    pub vertices: usize,
    pub edges: usize,
    /// `L(G)` in the edge-list format; vertex `u-v` stands for edge `uv`.
    pub edge_list: String,
    pub map: Vec<LineGraphEdge>,
}

pub fn line_graph(g: &Graph) -> Output<LineGraph> {
    let (line, map) = g.line_graph();
    let edges = (0..line.vertex_count())
        .map(|v| {
            let (a, b) = g.edge(map.edge_of(v));
            LineGraphEdge {
                vertex: line.name(v).to_string(),
                endpoints: [g.name(a).to_string(), g.name(b).to_string()],
            }
        })
        .collect();
    Output::clean(LineGraph {
        vertices: line.vertex_count(),
        edges: line.edge_count(),
        edge_list: to_edge_list(&line),
        map: edges,
    })
}

impl Human for LineGraph {
    fn human(&self) -> String {
        format!(
            "# line graph: {} vertices, {} edges\n{}",
            self.vertices, self.edges, self.edge_list
        )
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Psi {
    pub alpha: usize,
    pub max_size: Option<usize>,
    pub count: usize,
    pub sets: Vec<Vec<String>>,
    /// Members smaller than `alpha`.
    pub proper: Vec<Vec<String>>,
}

pub fn psi(g: &Graph, max_size: Option<usize>) -> Output<Psi> {
    let (alpha, _) = stability_number(g);
    let family = enumerate_psi(g, max_size);
    let proper = family
        .iter()
        .filter(|s| s.len() < alpha)
        .map(|s| g.vertex_names(s))
        .collect();
    Output::clean(Psi {
        alpha,
        max_size,
        count: family.len(),
        sets: family.to_names(g),
        proper,
    })
}

impl Human for Psi {
    fn human(&self) -> String {
        let mut out = format!(
            "{} local maximum stable sets (alpha = {}{})\n",
            self.count,
            self.alpha,
            self.max_size
                .map(|k| format!(", size at most {k}"))
                .unwrap_or_default()
        );
        for s in &self.sets {
            let tag = if s.len() < self.alpha { "" } else { "  maximum" };
            let _ = writeln!(out, "{}{tag}", braces(s));
        }
        out
    }
}

pub fn run_scan(config: &ScanConfig) -> Result<Output<ScanSummary>> {
    let summary = scan(config)?;
    Ok(Output {
        violated: !summary.violations.is_empty(),
        results: summary,
    })
}

pub fn scan_source(graph6: Option<&str>) -> Result<Source> {
    Ok(match graph6 {
        None => Source::Builtin,
        Some(path) => Source::Graph6Text(crate::input::read_text(path)?),
    })
}

fn table(out: &mut String, oq: &OpenQuestionTable) {
    let _ = writeln!(out, "n   graphs  neither  graph_only  line_graph_only  both  disconnected");
    for r in &oq.rows {
        let _ = writeln!(
            out,
            "{:<3} {:>6} {:>8} {:>11} {:>16} {:>5} {:>13}",
            r.n, r.graphs, r.neither, r.graph_only, r.line_graph_only, r.both, r.disconnected
        );
    }
    let _ = writeln!(out, "{} candidates", oq.candidates.len());
    for c in &oq.candidates {
        let _ = writeln!(out, "  {} with proper set {}", c.graph6, braces(&c.proper_set));
    }
}

impl Human for ScanSummary {
    fn human(&self) -> String {
        let mut out = format!("{} graphs processed", self.graphs_processed);
        if self.skipped > 0 {
            let _ = write!(out, ", {} skipped", self.skipped);
        }
        out.push('\n');
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<14} pass {:>6}  fail {:>4}  n/a {:>6}{}",
                c.check.as_str(),
                c.pass,
                c.fail,
                c.not_applicable,
                if c.check == Check::OpenQuestion {
                    format!("  candidates {}", c.candidates)
                } else {
                    String::new()
                }
            );
        }
        if let Some(oq) = &self.open_question {
            table(&mut out, oq);
        }
        if let Some(ce) = &self.counterexample {
            let _ = writeln!(out, "counterexample: {} fails {}", ce.graph, ce.check.as_str());
        }
        out
    }
}
