//! Acceptance criteria, one PASS/FAIL line each. Budgets and sizes are
//! fixed here; the process exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use lmss::atlas::{connected_graphs_up_to, scan, ScanConfig, ScanSummary};
use lmss::canon::canonical_certificate;
use lmss::duality::fixtures::{FIG1_W, FIG2_G, FIG2_H, FIG3_G, FIG4_G, FIG5_G, FIG6_G, FIG7_G};
use lmss::duality::{converse_witnesses, open_question_probe, recheck, verify_theorem2};
use lmss::kec::is_koenig_egervary;
use lmss::matching::{
    enumerate_maximum_matchings, extendable_to_maximum, is_maximal_matching,
    is_uniquely_restricted, matching_number, parse_matching_spec,
};
use lmss::report::Check;
use lmss::stability::{
    enumerate_maximum_stable_sets, enumerate_psi, has_proper_lmss, is_local_maximum_stable,
    stability_number,
};
use lmss::{EdgeSet, Graph, Outcome, Status, VertexSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const FIXTURE_BUDGET: Duration = Duration::from_secs(10);
const SMALL_CORPUS_BUDGET: Duration = Duration::from_secs(120);
const LARGE_CORPUS_BUDGET: Duration = Duration::from_secs(15 * 60);
const SMALL_CORPUS_CLASSES: usize = 143;
const LARGE_CORPUS_CLASSES: usize = 996;
const RANDOM_GRAPHS: usize = 200;
const RANDOM_SEED: u64 = 0x5eed_1a55;

type Verdict = Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn names<S: AsRef<str>>(g: &Graph, names: &[S]) -> VertexSet {
    g.vertex_set(names).unwrap()
}

fn fixture_claims() -> Verdict {
    let mut claims = 0;
    let mut claim = |cond: bool, label: &str| {
        claims += 1;
        ensure(cond, || format!("claim failed: {label}"))
    };

    let w = FIG1_W.graph();
    let psi = enumerate_psi(&w, None);
    let omega = enumerate_maximum_stable_sets(&w);
    for s in [&["e", "g"][..], &["a"], &["d", "f"]] {
        claim(psi.contains(&names(&w, s)), &format!("{s:?} in Psi(W)"))?;
    }
    for s in [["a", "d", "f"], ["b", "e", "g"]] {
        claim(omega.contains(&names(&w, &s)), &format!("{s:?} in Omega(W)"))?;
    }

    let g2 = FIG2_G.graph();
    let xy = names(&g2, &["x", "y"]);
    claim(enumerate_maximum_stable_sets(&g2).contains(&xy), "{x,y} in Omega(G2)")?;
    claim(is_koenig_egervary(&g2).is_none(), "G2 is not KE")?;
    let cut = g2.cut_set(&xy, &g2.all_vertices().difference(&xy)).unwrap();
    let m1 = parse_matching_spec(&g2, "x-z,y-v").unwrap();
    let m2 = parse_matching_spec(&g2, "y-z,u-v").unwrap();
    claim(m1.is_subset(&cut) && !m2.is_subset(&cut), "M1 inside, M2 outside the cut")?;

    let h2 = FIG2_H.graph();
    let cert = is_koenig_egervary(&h2);
    claim(
        cert.as_ref().is_some_and(|c| c.matching.len() == 3 && c.stable.len() == 4),
        "H2 is KE with mu = 3",
    )?;
    claim(matching_number(&h2) == 3, "mu(H2) = 3")?;

    let g3 = FIG3_G.graph();
    let report = verify_theorem2(&g3);
    let m1 = g3.edge_names(&FIG3_G.labelled_edges(&g3, &["e1", "e6"]));
    claim(
        report.status == Status::Pass
            && report
                .instances
                .iter()
                .any(|i| i.set == ["v", "z"] && i.matching == m1 && i.outcome == Outcome::Pass),
        "(S1, M1) passes on G3",
    )?;
    claim(recheck(&g3, &report).is_ok(), "G3 report rechecks")?;
    let (l3, map3) = g3.line_graph();
    let m2 = FIG3_G.labelled_edges(&g3, &["e3", "e6"]);
    claim(
        !is_local_maximum_stable(&l3, &map3.image(&m2)).unwrap(),
        "M2 not in Psi(L(G3))",
    )?;

    let g4 = FIG4_G.graph();
    let target = FIG4_G.labelled_edges(&g4, &["e5", "e7"]);
    claim(
        converse_witnesses(&g4)
            .iter()
            .any(|c| c.matching.edges() == &target && c.witnessing_set.is_none()),
        "{e5,e7} in Psi(L(G4)) without a witnessing S",
    )?;

    let g5 = FIG5_G.graph();
    let m = FIG5_G.labelled_edges(&g5, &["e0", "e1", "e2"]);
    claim(matching_number(&g5) == 5, "mu(G5) = 5")?;
    claim(is_maximal_matching(&g5, &m).unwrap(), "{e0,e1,e2} maximal")?;
    claim(extendable_to_maximum(&g5, &m).unwrap().is_none(), "{e0,e1,e2} not extendable")?;

    let g6 = FIG6_G.graph();
    claim(is_koenig_egervary(&g6).is_some(), "G6 is KE")?;
    let acf = names(&g6, &["a", "c", "f"]);
    let closed = g6.neighborhood(&acf, true).unwrap();
    let (h6, _) = g6.induced_subgraph(&closed).unwrap();
    claim(is_local_maximum_stable(&g6, &acf).unwrap(), "{a,c,f} in Psi(G6)")?;
    claim(is_koenig_egervary(&h6).is_none(), "G6[N[{a,c,f}]] not KE")?;
    let m = parse_matching_spec(&g6, "a-b,c-d,f-h").unwrap();
    claim(extendable_to_maximum(&g6, &m).unwrap().is_none(), "{ab,cd,fh} not extendable")?;

    let g7 = FIG7_G.graph();
    let (l7, _) = g7.line_graph();
    claim(has_proper_lmss(&g7).is_none(), "G7 has no proper LMSS")?;
    claim(has_proper_lmss(&l7).is_none(), "L(G7) has no proper LMSS")?;

    Ok(format!("{claims} claims"))
}

fn exhaustive(check: Check, max_n: usize, jobs: usize, classes: usize) -> Verdict {
    let summary = scan(&ScanConfig::builtin(max_n, &[check], jobs)).map_err(|e| e.to_string())?;
    ensure(summary.graphs_processed == classes, || {
        format!("{} classes, expected {classes}", summary.graphs_processed)
    })?;
    let counts = summary.counts(check).unwrap();
    ensure(summary.violations.is_empty() && counts.fail == 0, || {
        format!("{} violations", summary.violations.len())
    })?;
    Ok(format!(
        "n<={max_n}, {classes} classes, {} pass, {} not applicable, 0 violations",
        counts.pass, counts.not_applicable
    ))
}

fn two_corpora(check: Check) -> Verdict {
    let t = Instant::now();
    let small = exhaustive(check, 6, 1, SMALL_CORPUS_CLASSES)?;
    let small_time = t.elapsed();
    ensure(small_time < SMALL_CORPUS_BUDGET, || {
        format!("n<=6 single worker took {small_time:?}")
    })?;
    let t = Instant::now();
    let large = exhaustive(check, 7, 4, LARGE_CORPUS_CLASSES)?;
    let large_time = t.elapsed();
    ensure(large_time < LARGE_CORPUS_BUDGET, || {
        format!("n<=7 four workers took {large_time:?}")
    })?;
    Ok(format!(
        "{small} in {small_time:.1?}; {large} in {large_time:.1?}"
    ))
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Graph::numbered(n, &pairs).unwrap()
}

fn alpha_by_subsets(g: &Graph) -> usize {
    let n = g.vertex_count();
    let masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| 1 << u | 1 << v)
        .collect();
    (0u32..1 << n)
        .filter(|s| masks.iter().all(|m| s & m != *m))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Largest matching by trying every edge subset that is a matching,
/// branching on whether each edge is used.
fn mu_by_enumeration(g: &Graph) -> usize {
    fn go(g: &Graph, e: usize, used: u64, size: usize, best: &mut usize) {
        if e == g.edge_count() {
            *best = (*best).max(size);
            return;
        }
        go(g, e + 1, used, size, best);
        let (u, v) = g.edge(e);
        let m = 1u64 << u | 1u64 << v;
        if used & m == 0 {
            go(g, e + 1, used | m, size + 1, best);
        }
    }
    let mut best = 0;
    go(g, 0, 0, 0, &mut best);
    best
}

fn all_matchings(g: &Graph) -> Vec<EdgeSet> {
    fn go(g: &Graph, e: usize, used: u64, cur: &mut Vec<usize>, out: &mut Vec<EdgeSet>) {
        if e == g.edge_count() {
            out.push(cur.iter().copied().collect());
            return;
        }
        go(g, e + 1, used, cur, out);
        let (u, v) = g.edge(e);
        let m = 1u64 << u | 1u64 << v;
        if used & m == 0 {
            cur.push(e);
            go(g, e + 1, used | m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of perfect matchings of the subgraph induced by `vertices`.
fn perfect_matchings(g: &Graph, vertices: u64) -> usize {
    if vertices == 0 {
        return 1;
    }
    let u = vertices.trailing_zeros() as usize;
    let rest = vertices & !(1 << u);
    g.neighbors(u)
        .iter()
        .filter(|&&v| rest >> v & 1 == 1)
        .map(|&v| perfect_matchings(g, rest & !(1 << v)))
        .sum()
}

fn oracle_equivalence() -> Verdict {
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    for i in 0..RANDOM_GRAPHS {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.1..0.7);
        let g = random_graph(&mut rng, n, p);
        let (alpha, _) = stability_number(&g);
        let oracle = alpha_by_subsets(&g);
        ensure(alpha == oracle, || {
            format!("alpha graph {i}: {alpha} vs subset scan {oracle}")
        })?;
    }
    let mut mu_graphs = 0;
    while mu_graphs < RANDOM_GRAPHS {
        let n = rng.gen_range(2..=16);
        let p = rng.gen_range(0.05..0.5);
        let g = random_graph(&mut rng, n, p);
        if g.edge_count() > 20 {
            continue;
        }
        mu_graphs += 1;
        let mu = matching_number(&g);
        let oracle = mu_by_enumeration(&g);
        ensure(mu == oracle, || format!("mu: {mu} vs enumeration {oracle}"))?;
    }
    let mut matchings_checked = 0;
    for g in connected_graphs_up_to(6).unwrap().into_iter().flatten() {
        for m in all_matchings(&g) {
            let mut vertices = 0u64;
            for e in m.iter() {
                let (u, v) = g.edge(e);
                vertices |= 1 << u | 1 << v;
            }
            let by_cycles = is_uniquely_restricted(&g, &m).unwrap();
            let by_count = perfect_matchings(&g, vertices) == 1;
            ensure(by_cycles == by_count, || {
                format!("uniquely restricted disagreement on {:?}", g.edge_names(&m))
            })?;
            matchings_checked += 1;
        }
    }
    Ok(format!(
        "{RANDOM_GRAPHS} alpha graphs, {RANDOM_GRAPHS} mu graphs, {matchings_checked} matchings"
    ))
}

fn structural_identities() -> Verdict {
    let corpus: Vec<Graph> = connected_graphs_up_to(6).unwrap().into_iter().flatten().collect();
    for g in &corpus {
        let (line, _) = g.line_graph();
        let (line_alpha, _) = stability_number(&line);
        ensure(matching_number(g) == line_alpha, || {
            format!("mu != alpha(L) on {}", lmss::format::to_graph6(g))
        })?;
        let expected: usize = (0..g.vertex_count())
            .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
            .sum();
        ensure(line.edge_count() == expected, || {
            format!("|E(L)| wrong on {}", lmss::format::to_graph6(g))
        })?;
    }
    for n in 3..=8 {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let c = Graph::numbered(n, &pairs).unwrap();
        let (line, _) = c.line_graph();
        ensure(
            canonical_certificate(&c).unwrap() == canonical_certificate(&line).unwrap(),
            || format!("C{n} and L(C{n}) certificates differ"),
        )?;
    }
    Ok(format!("{} graphs, C3..C8", corpus.len()))
}

fn labelled_connected_count(n: usize) -> u64 {
    let all: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << all.len())
        .filter(|mask| {
            let mut seen = 1u64;
            let mut frontier = 1u64;
            while frontier != 0 {
                let mut next = 0;
                for (b, &(u, v)) in all.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        if frontier >> u & 1 == 1 {
                            next |= 1 << v;
                        }
                        if frontier >> v & 1 == 1 {
                            next |= 1 << u;
                        }
                    }
                }
                frontier = next & !seen;
                seen |= next;
            }
            n == 0 || seen.count_ones() as usize == n
        })
        .count() as u64
}

fn automorphism_count(g: &Graph) -> u64 {
    fn go(g: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut u64) {
        let k = image.len();
        if k == g.vertex_count() {
            *count += 1;
            return;
        }
        for t in 0..g.vertex_count() {
            if used[t] {
                continue;
            }
            let consistent = (0..k).all(|u| g.has_edge(u, k) == g.has_edge(image[u], t));
            if consistent {
                used[t] = true;
                image.push(t);
                go(g, image, used, count);
                image.pop();
                used[t] = false;
            }
        }
    }
    let mut count = 0;
    go(g, &mut Vec::new(), &mut vec![false; g.vertex_count()], &mut count);
    count
}

fn atlas_integrity() -> Verdict {
    let levels = connected_graphs_up_to(6).unwrap();
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    ensure(counts == [1, 1, 2, 6, 21, 112], || format!("class counts {counts:?}"))?;
    for (k, reps) in levels.iter().enumerate() {
        let n = k + 1;
        let factorial: u64 = (1..=n as u64).product();
        let orbits: u64 = reps.iter().map(|g| factorial / automorphism_count(g)).sum();
        let labelled = labelled_connected_count(n);
        ensure(orbits == labelled, || {
            format!("n={n}: orbit sum {orbits} vs labelled count {labelled}")
        })?;
    }
    let serialize = |jobs| -> Result<String, String> {
        let summary = scan(&ScanConfig::builtin(7, &Check::ALL, jobs)).map_err(|e| e.to_string())?;
        serde_json::to_string(&summary).map_err(|e| e.to_string())
    };
    let one = serialize(1)?;
    let four = serialize(4)?;
    ensure(one == four, || "scan output differs between 1 and 4 workers".into())?;
    Ok(format!("counts {counts:?}, labelled oracle agrees, {} byte scan identical", one.len()))
}

fn open_question_table() -> Verdict {
    let run = || -> Result<ScanSummary, String> {
        scan(&ScanConfig::builtin(7, &[Check::OpenQuestion], 4)).map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first == second, || "classification differs between runs".into())?;
    let table = first.open_question.as_ref().ok_or("no table emitted")?;
    println!("    n  graphs  neither  graph_only  line_graph_only  both");
    for r in &table.rows {
        println!(
            "    {:<2} {:>7} {:>8} {:>11} {:>16} {:>5}",
            r.n, r.graphs, r.neither, r.graph_only, r.line_graph_only, r.both
        );
        ensure(r.neither + r.graph_only + r.line_graph_only + r.both == r.graphs, || {
            format!("row n={} does not add up", r.n)
        })?;
    }
    for record in &table.candidates {
        record
            .recheck()
            .map_err(|e| format!("candidate {} fails recheck: {e}", record.graph6))?;
        serde_json::to_string(record).map_err(|e| e.to_string())?;
    }
    let probed: usize = table.rows.iter().map(|r| r.graphs).sum();
    ensure(probed == LARGE_CORPUS_CLASSES, || format!("{probed} graphs probed"))?;
    let fig7 = open_question_probe(&FIG7_G.graph()).map_err(|e| e.to_string())?;
    ensure(!fig7.is_candidate(), || "FIG7 flagged as candidate".into())?;
    Ok(format!(
        "{probed} graphs, {} candidates with self-certifying records",
        table.candidates.len()
    ))
}

fn lemma_on_ke_graphs() -> Verdict {
    let summary = scan(&ScanConfig::builtin(7, &[Check::LemmaMatch], 4)).map_err(|e| e.to_string())?;
    let counts = summary.counts(Check::LemmaMatch).unwrap();
    ensure(summary.violations.is_empty(), || {
        format!("{} violations", summary.violations.len())
    })?;
    let ke = connected_graphs_up_to(7)
        .unwrap()
        .into_iter()
        .flatten()
        .filter(|g| is_koenig_egervary(g).is_some())
        .count();
    ensure(ke == counts.pass, || {
        format!("{ke} KE graphs but {} lemma passes", counts.pass)
    })?;
    for g in connected_graphs_up_to(5).unwrap().into_iter().flatten() {
        if is_koenig_egervary(&g).is_some() {
            let (alpha, _) = stability_number(&g);
            ensure(
                enumerate_maximum_matchings(&g)
                    .iter()
                    .all(|m| m.len() == g.vertex_count() - alpha),
                || "a maximum matching of a KE graph has the wrong size".into(),
            )?;
        }
    }
    Ok(format!(
        "{} graphs, {ke} KE graphs, 0 violations",
        summary.graphs_processed
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Verdict,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "fixture claim suite",
            budget: FIXTURE_BUDGET,
            run: fixture_claims,
        },
        Criterion {
            id: 2,
            name: "local matchings stay local in L(G)",
            budget: SMALL_CORPUS_BUDGET + LARGE_CORPUS_BUDGET,
            run: || two_corpora(Check::Theorem2),
        },
        Criterion {
            id: 3,
            name: "local matchings extend to maximum ones",
            budget: SMALL_CORPUS_BUDGET + LARGE_CORPUS_BUDGET,
            run: || two_corpora(Check::Corollary1),
        },
        Criterion {
            id: 4,
            name: "local maximum stable sets extend",
            budget: LARGE_CORPUS_BUDGET,
            run: || exhaustive(Check::NtExtension, 7, 4, LARGE_CORPUS_CLASSES),
        },
        Criterion {
            id: 5,
            name: "matching cut lemma on KE graphs",
            budget: LARGE_CORPUS_BUDGET,
            run: lemma_on_ke_graphs,
        },
        Criterion {
            id: 6,
            name: "oracle equivalence",
            budget: LARGE_CORPUS_BUDGET,
            run: oracle_equivalence,
        },
        Criterion {
            id: 7,
            name: "structural identities",
            budget: LARGE_CORPUS_BUDGET,
            run: structural_identities,
        },
        Criterion {
            id: 8,
            name: "atlas integrity",
            budget: LARGE_CORPUS_BUDGET,
            run: atlas_integrity,
        },
        Criterion {
            id: 9,
            name: "open question probe",
            budget: LARGE_CORPUS_BUDGET,
            run: open_question_table,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(detail) if elapsed < c.budget => format!("PASS ({detail}; {elapsed:.2?})"),
            Ok(detail) => {
                failed += 1;
                format!("FAIL (over budget {:?}: {elapsed:.2?}; {detail})", c.budget)
            }
            Err(why) => {
                failed += 1;
                format!("FAIL ({why}; {elapsed:.2?})")
            }
        };
        println!("criterion {} [{}]: {verdict}", c.id, c.name);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
