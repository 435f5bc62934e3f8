//! Maximum and local maximum stable sets.
//!
//! A stable set `S` is a *local maximum stable set* when it is a maximum
//! stable set of the subgraph spanned by its closed neighborhood `N[S]`.
//! Ψ(G) collects these, Ω(G) the maximum stable sets; Ω(G) ⊆ Ψ(G), and a
//! member of Ψ(G) − Ω(G) is called *proper* here.
//!
//! The empty set is never reported as a local maximum stable set.
//!
//! Everything rests on one exact solver: branch and bound over candidate
//! bitsets, branching on a maximum-degree vertex, with degree ≤ 1
//! reductions and a greedy clique-cover upper bound.

use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Omega,
    Psi,
}

/// A family of stable sets of one graph, sorted by name sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetFamily {
    pub kind: FamilyKind,
    pub sets: Vec<VertexSet>,
}

impl StableSetFamily {
    fn new(g: &Graph, kind: FamilyKind, mut sets: Vec<VertexSet>) -> Self {
        sort_by_names(g, &mut sets);
        StableSetFamily { kind, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.sets.iter()
    }

    pub fn to_names(&self, g: &Graph) -> Vec<Vec<String>> {
        self.sets.iter().map(|s| g.vertex_names(s)).collect()
    }
}

/// Sorts vertex sets lexicographically by their sorted name sequences.
pub fn sort_by_names(g: &Graph, sets: &mut [VertexSet]) {
    sets.sort_by_cached_key(|s| g.vertex_names(s));
}

/// Largest stable set inside `candidates` when it has more than `lower`
/// vertices.
pub(crate) fn max_stable_above(g: &Graph, candidates: &Bits, lower: usize) -> Option<Bits> {
    let mut solver = Solver {
        g,
        best: lower,
        best_set: None,
    };
    let mut chosen = Vec::new();
    solver.search(candidates.clone(), &mut chosen);
    solver.best_set
}

pub(crate) fn alpha_of(g: &Graph, candidates: &Bits) -> usize {
    max_stable_above(g, candidates, 0).map_or(0, |s| s.count())
}

pub(crate) fn alpha_exceeds(g: &Graph, candidates: &Bits, k: usize) -> bool {
    max_stable_above(g, candidates, k).is_some()
}

/// Upper bound on α of the subgraph spanned by `p`: the number of cliques
/// in a greedy clique partition.
fn clique_cover_bound(g: &Graph, p: &Bits) -> usize {
    let mut rest = p.clone();
    let mut count = 0;
    while let Some(u) = rest.first() {
        rest.remove(u);
        let mut common = rest.and(g.row(u));
        while let Some(w) = common.first() {
            rest.remove(w);
            common.intersect_with(g.row(w));
        }
        count += 1;
    }
    count
}

struct Solver<'g> {
    g: &'g Graph,
    best: usize,
    best_set: Option<Bits>,
}

impl Solver<'_> {
    fn search(&mut self, mut p: Bits, chosen: &mut Vec<usize>) {
        let base = chosen.len();
        // a vertex with at most one neighbour left belongs to some maximum stable set
        loop {
            let low = p.iter().find(|&v| p.intersection_count(self.g.row(v)) <= 1);
            match low {
                Some(v) => {
                    chosen.push(v);
                    p.remove(v);
                    p.difference_with(self.g.row(v));
                }
                None => break,
            }
        }
        if p.is_empty() {
            if chosen.len() > self.best {
                self.best = chosen.len();
                self.best_set = Some(Bits::from_iter_cap(
                    self.g.vertex_count(),
                    chosen.iter().copied(),
                ));
            }
            chosen.truncate(base);
            return;
        }
        if chosen.len() + clique_cover_bound(self.g, &p) <= self.best {
            chosen.truncate(base);
            return;
        }
        let v = p
            .iter()
            .max_by_key(|&v| (p.intersection_count(self.g.row(v)), std::cmp::Reverse(v)))
            .expect("p is non-empty");
        let mut with = p.and_not(self.g.row(v));
        with.remove(v);
        chosen.push(v);
        self.search(with, chosen);
        chosen.pop();
        p.remove(v);
        self.search(p, chosen);
        chosen.truncate(base);
    }
}

pub fn is_stable(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_vertices(s)?;
    Ok(is_stable_bits(g, &s.to_bits(g.vertex_count())))
}

pub(crate) fn is_stable_bits(g: &Graph, s: &Bits) -> bool {
    s.iter().all(|v| !s.intersects(g.row(v)))
}

/// α(G) with the lexicographically least (by name) maximum stable set.
pub fn stability_number(g: &Graph) -> (usize, VertexSet) {
    let witness = least_extension(g, &Bits::new(g.vertex_count()))
        .expect("the empty set extends to a maximum stable set");
    (witness.len(), witness)
}

/// Lexicographically least (by name) maximum stable set containing the
/// stable set `s`, if any exists.
fn least_extension(g: &Graph, s: &Bits) -> Option<VertexSet> {
    let n = g.vertex_count();
    let alpha = alpha_of(g, &Bits::full(n));
    let mut allowed = Bits::full(n).and_not(&g.neighborhood_bits(s, true));
    let mut need = alpha.checked_sub(s.count())?;
    if alpha_of(g, &allowed) != need {
        return None;
    }
    let mut chosen = s.clone();
    for v in g.name_order() {
        if need == 0 {
            break;
        }
        if !allowed.contains(v) {
            continue;
        }
        let mut trial = allowed.and_not(g.row(v));
        trial.remove(v);
        if alpha_of(g, &trial) + 1 == need {
            chosen.insert(v);
            allowed = trial;
            need -= 1;
        }
    }
    Some(VertexSet::from_bits(&chosen))
}

/// Ω(G), every maximum stable set.
pub fn enumerate_maximum_stable_sets(g: &Graph) -> StableSetFamily {
    let n = g.vertex_count();
    let alpha = alpha_of(g, &Bits::full(n));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_of_size(g, Bits::full(n), alpha, &mut chosen, &mut out);
    StableSetFamily::new(g, FamilyKind::Omega, out)
}

fn collect_of_size(
    g: &Graph,
    candidates: Bits,
    target: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if chosen.len() == target {
        out.push(chosen.iter().copied().collect());
        return;
    }
    let mut rest = candidates;
    while let Some(v) = rest.first() {
        if chosen.len() + clique_cover_bound(g, &rest) < target {
            return;
        }
        rest.remove(v);
        chosen.push(v);
        collect_of_size(g, rest.and_not(g.row(v)), target, chosen, out);
        chosen.pop();
    }
}

/// Whether `s` is a non-empty local maximum stable set. Unstable or empty
/// sets give `false`.
pub fn is_local_maximum_stable(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_vertices(s)?;
    Ok(is_lmss_bits(g, &s.to_bits(g.vertex_count())))
}

pub(crate) fn is_lmss_bits(g: &Graph, s: &Bits) -> bool {
    let size = s.count();
    size > 0
        && is_stable_bits(g, s)
        && !alpha_exceeds(g, &g.neighborhood_bits(s, true), size)
}

/// Ψ(G): every non-empty local maximum stable set with at most `max_size`
/// vertices (all of them when `None`).
pub fn enumerate_psi(g: &Graph, max_size: Option<usize>) -> StableSetFamily {
    let n = g.vertex_count();
    let cap = max_size.unwrap_or(n);
    let mut out = Vec::new();
    let mut current = Bits::new(n);
    walk_stable_sets(g, Bits::full(n), &mut current, 0, cap, &mut |s| {
        if is_lmss_bits(g, s) {
            out.push(VertexSet::from_bits(s));
        }
    });
    StableSetFamily::new(g, FamilyKind::Psi, out)
}

/// Visits every non-empty stable set of size ≤ `cap` extending `current`
/// by vertices of `candidates`, depth first in index order.
fn walk_stable_sets(
    g: &Graph,
    candidates: Bits,
    current: &mut Bits,
    size: usize,
    cap: usize,
    visit: &mut dyn FnMut(&Bits),
) {
    if size >= cap {
        return;
    }
    let mut rest = candidates;
    while let Some(v) = rest.first() {
        rest.remove(v);
        current.insert(v);
        visit(current);
        walk_stable_sets(g, rest.and_not(g.row(v)), current, size + 1, cap, visit);
        current.remove(v);
    }
}

/// Lexicographically least (by name) maximum stable set containing `s`.
///
/// Refuses with [`Error::HypothesisViolated`] unless `s` is a local maximum
/// stable set.
pub fn extend_to_maximum_stable(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if !is_local_maximum_stable(g, s)? {
        return Err(Error::HypothesisViolated(format!(
            "{{{}}}",
            g.vertex_names(s).join(",")
        )));
    }
    least_extension(g, &s.to_bits(g.vertex_count())).ok_or_else(|| {
        Error::HypothesisViolated(format!(
            "{{{}}} has no maximum stable superset",
            g.vertex_names(s).join(",")
        ))
    })
}

/// First member of Ψ(G) − Ω(G) in name order, if any.
pub fn has_proper_lmss(g: &Graph) -> Option<VertexSet> {
    let alpha = alpha_of(g, &Bits::full(g.vertex_count()));
    if alpha <= 1 {
        return None;
    }
    enumerate_psi(g, Some(alpha - 1)).sets.into_iter().next()
}
