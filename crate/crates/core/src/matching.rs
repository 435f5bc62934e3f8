//! Matchings in general graphs.
//!
//! Maximum matchings come from Edmonds' augmenting-path search with blossom
//! contraction, run on the subgraph spanned by an "active" vertex set so
//! that the same engine answers questions about `G − W` and `G[X]` without
//! building new graphs. Returned witnesses are the lexicographically least
//! by edge-id sequence.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};

/// An edge set whose edges are pairwise vertex-disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: EdgeSet,
    saturated: VertexSet,
}

impl Matching {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Matching> {
        g.check_edges(&edges)?;
        let mut seen = Bits::new(g.vertex_count());
        for e in edges.iter() {
            let (u, v) = g.edge(e);
            for x in [u, v] {
                if seen.contains(x) {
                    return Err(Error::NotAMatching(format!(
                        "vertex `{}` is covered twice",
                        g.name(x)
                    )));
                }
                seen.insert(x);
            }
        }
        Ok(Matching {
            edges,
            saturated: VertexSet::from_bits(&seen),
        })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn saturated(&self) -> &VertexSet {
        &self.saturated
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn to_names(&self, g: &Graph) -> Vec<String> {
        g.edge_names(&self.edges)
    }
}

/// Parses `u-v,w-x` into edge ids. Names may themselves contain `-`; any
/// split that names an existing edge is accepted.
pub fn parse_matching_spec(g: &Graph, spec: &str) -> Result<EdgeSet> {
    let mut ids = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let id = token
            .match_indices('-')
            .find_map(|(i, _)| g.edge_by_names(&token[..i], &token[i + 1..]).ok())
            .ok_or_else(|| Error::UnknownEdge(token.to_string()))?;
        ids.push(id);
    }
    Ok(ids.into_iter().collect())
}

/// Augmenting-path search restricted to `active` vertices, optionally
/// ignoring one edge.
struct Blossom<'g> {
    g: &'g Graph,
    active: Bits,
    skip: Option<(usize, usize)>,
    mate: Vec<Option<usize>>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph, active: Bits) -> Self {
        Blossom {
            g,
            active,
            skip: None,
            mate: vec![None; g.vertex_count()],
        }
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&w| {
            self.active.contains(w) && self.skip != Some((v.min(w), v.max(w)))
        })
    }

    fn lca(&self, base: &[usize], parent: &[Option<usize>], a: usize, b: usize) -> usize {
        let mut on_path = vec![false; self.g.vertex_count()];
        let mut a = a;
        loop {
            a = base[a];
            on_path[a] = true;
            match self.mate[a] {
                Some(m) => a = parent[m].expect("matched tree vertex has a parent"),
                None => break,
            }
        }
        let mut b = b;
        loop {
            b = base[b];
            if on_path[b] {
                return b;
            }
            b = parent[self.mate[b].expect("non-root tree vertex is matched")]
                .expect("matched tree vertex has a parent");
        }
    }

    fn mark_path(
        &self,
        base: &[usize],
        parent: &mut [Option<usize>],
        in_blossom: &mut [bool],
        mut v: usize,
        b: usize,
        mut child: usize,
    ) {
        while base[v] != b {
            let m = self.mate[v].expect("blossom vertex is matched");
            in_blossom[base[v]] = true;
            in_blossom[base[m]] = true;
            parent[v] = Some(child);
            child = m;
            v = parent[m].expect("matched tree vertex has a parent");
        }
    }

    /// Alternating path from the exposed vertex `root` to another exposed
    /// vertex, listed from `root`.
    fn augmenting_path(&self, root: usize) -> Option<Vec<usize>> {
        let n = self.g.vertex_count();
        let mut used = vec![false; n];
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut base: Vec<usize> = (0..n).collect();
        let mut queue = VecDeque::from([root]);
        used[root] = true;
        while let Some(v) = queue.pop_front() {
            let around: Vec<usize> = self.neighbors(v).collect();
            for to in around {
                if base[v] == base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let odd_cycle =
                    to == root || self.mate[to].is_some_and(|m| parent[m].is_some());
                if odd_cycle {
                    let cur = self.lca(&base, &parent, v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(&base, &mut parent, &mut in_blossom, v, cur, to);
                    self.mark_path(&base, &mut parent, &mut in_blossom, to, cur, v);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to].is_none() {
                    parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(self.unwind(&parent, to)),
                        Some(m) => {
                            used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn unwind(&self, parent: &[Option<usize>], end: usize) -> Vec<usize> {
        let mut path = vec![end];
        let mut v = end;
        loop {
            let pv = parent[v].expect("tree vertex has a parent");
            path.push(pv);
            match self.mate[pv] {
                Some(next) => {
                    path.push(next);
                    v = next;
                }
                None => break,
            }
        }
        path.reverse();
        path
    }

    fn augment(&mut self, path: &[usize]) {
        for pair in path.chunks(2) {
            self.mate[pair[0]] = Some(pair[1]);
            self.mate[pair[1]] = Some(pair[0]);
        }
    }

    fn maximize(&mut self) -> usize {
        let vertices: Vec<usize> = self.active.iter().collect();
        for v in vertices {
            if self.mate[v].is_none() {
                if let Some(path) = self.augmenting_path(v) {
                    self.augment(&path);
                }
            }
        }
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }
}

/// μ of the subgraph spanned by `active`.
pub(crate) fn mu_of(g: &Graph, active: &Bits) -> usize {
    Blossom::new(g, active.clone()).maximize()
}

/// Lexicographically least maximum matching of the subgraph spanned by
/// `active` that contains `forced`, if one exists.
pub(crate) fn least_maximum_within(g: &Graph, active: &Bits, forced: &EdgeSet) -> Option<EdgeSet> {
    let target = mu_of(g, active);
    let mut free = active.clone();
    for e in forced.iter() {
        let (u, v) = g.edge(e);
        free.remove(u);
        free.remove(v);
    }
    let mut need = target.checked_sub(forced.len())?;
    if mu_of(g, &free) != need {
        return None;
    }
    let mut chosen: Vec<usize> = forced.iter().collect();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if need == 0 {
            break;
        }
        if !free.contains(u) || !free.contains(v) {
            continue;
        }
        let mut trial = free.clone();
        trial.remove(u);
        trial.remove(v);
        if mu_of(g, &trial) + 1 == need {
            chosen.push(id);
            free = trial;
            need -= 1;
        }
    }
    Some(chosen.into_iter().collect())
}

pub fn matching_number(g: &Graph) -> usize {
    mu_of(g, &Bits::full(g.vertex_count()))
}

/// Lexicographically least maximum matching.
pub fn maximum_matching(g: &Graph) -> Matching {
    let edges = least_maximum_within(g, &Bits::full(g.vertex_count()), &EdgeSet::new())
        .expect("every graph has a maximum matching");
    Matching::new(g, edges).expect("search returns a matching")
}

/// Every maximum matching of the subgraph spanned by `active`, in
/// lexicographic order of edge ids.
pub(crate) fn maximum_matchings_within(g: &Graph, active: &Bits) -> Vec<EdgeSet> {
    let candidates: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            active.contains(u) && active.contains(v)
        })
        .collect();
    let target = mu_of(g, active);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut covered = Bits::new(g.vertex_count());
    collect_matchings(g, &candidates, 0, target, &mut covered, &mut chosen, &mut out);
    out
}

fn collect_matchings(
    g: &Graph,
    candidates: &[usize],
    start: usize,
    target: usize,
    covered: &mut Bits,
    chosen: &mut Vec<usize>,
    out: &mut Vec<EdgeSet>,
) {
    if chosen.len() == target {
        out.push(chosen.iter().copied().collect());
        return;
    }
    for i in start..candidates.len() {
        if chosen.len() + (candidates.len() - i) < target {
            return;
        }
        let e = candidates[i];
        let (u, v) = g.edge(e);
        if covered.contains(u) || covered.contains(v) {
            continue;
        }
        covered.insert(u);
        covered.insert(v);
        chosen.push(e);
        collect_matchings(g, candidates, i + 1, target, covered, chosen, out);
        chosen.pop();
        covered.remove(u);
        covered.remove(v);
    }
}

/// All matchings of size μ(G), in lexicographic order of edge ids.
pub fn enumerate_maximum_matchings(g: &Graph) -> Vec<Matching> {
    maximum_matchings_within(g, &Bits::full(g.vertex_count()))
        .into_iter()
        .map(|edges| Matching::new(g, edges).expect("enumeration yields matchings"))
        .collect()
}

/// No edge of `g` can be added to `m`.
pub fn is_maximal_matching(g: &Graph, m: &EdgeSet) -> Result<bool> {
    let m = Matching::new(g, m.clone())?;
    Ok(g
        .edges()
        .iter()
        .all(|&(u, v)| m.saturated.contains(u) || m.saturated.contains(v)))
}

/// Which of the two matchings an edge of the symmetric difference belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Owner {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// One component of `G[M Δ Q]`, walked from one end (a path) or from its
/// smallest vertex (a cycle).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingComponent {
    pub kind: ComponentKind,
    /// Walk order; a cycle does not repeat its first vertex.
    pub vertices: Vec<usize>,
    /// Edges in walk order with their owner.
    pub edges: Vec<(usize, Owner)>,
}

impl AlternatingComponent {
    pub fn count(&self, owner: Owner) -> usize {
        self.edges.iter().filter(|(_, o)| *o == owner).count()
    }

    /// The owner of strictly more edges, if any.
    pub fn majority(&self) -> Option<Owner> {
        let (first, second) = (self.count(Owner::First), self.count(Owner::Second));
        match first.cmp(&second) {
            std::cmp::Ordering::Greater => Some(Owner::First),
            std::cmp::Ordering::Less => Some(Owner::Second),
            std::cmp::Ordering::Equal => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlternatingDecomposition {
    pub components: Vec<AlternatingComponent>,
}

/// Splits `(M − Q) ∪ (Q − M)` into its alternating paths and even cycles.
pub fn symmetric_difference_decomposition(
    g: &Graph,
    m: &EdgeSet,
    q: &EdgeSet,
) -> Result<AlternatingDecomposition> {
    Matching::new(g, m.clone())?;
    Matching::new(g, q.clone())?;
    let n = g.vertex_count();
    let mut incident: Vec<Vec<(usize, Owner)>> = vec![Vec::new(); n];
    for (set, other, owner) in [(m, q, Owner::First), (q, m, Owner::Second)] {
        for e in set.iter().filter(|&e| !other.contains(e)) {
            let (u, v) = g.edge(e);
            incident[u].push((e, owner));
            incident[v].push((e, owner));
        }
    }
    for list in &mut incident {
        list.sort_unstable_by_key(|(e, _)| *e);
    }
    let mut used = vec![false; g.edge_count()];
    let mut components = Vec::new();
    let walk = |start: usize, used: &mut Vec<bool>| {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut v = start;
        while let Some(&(e, owner)) = incident[v].iter().find(|(e, _)| !used[*e]) {
            used[e] = true;
            edges.push((e, owner));
            let (a, b) = g.edge(e);
            v = if a == v { b } else { a };
            if v == start {
                break;
            }
            vertices.push(v);
        }
        (vertices, edges)
    };
    for v in 0..n {
        if incident[v].len() == 1 && !used[incident[v][0].0] {
            let (vertices, edges) = walk(v, &mut used);
            components.push(AlternatingComponent {
                kind: ComponentKind::Path,
                vertices,
                edges,
            });
        }
    }
    for (v, around) in incident.iter().enumerate() {
        if around.iter().any(|(e, _)| !used[*e]) {
            let (vertices, edges) = walk(v, &mut used);
            components.push(AlternatingComponent {
                kind: ComponentKind::Cycle,
                vertices,
                edges,
            });
        }
    }
    components.sort_by_key(|c| c.vertices.iter().min().copied());
    Ok(AlternatingDecomposition { components })
}

/// An `M`-alternating cycle inside the subgraph spanned by the vertices `M`
/// saturates, as a closed vertex sequence starting with an `M`-edge.
///
/// For each `M`-edge `ab` this looks for an augmenting path from `a` to `b`
/// with respect to `M − ab` in `G[V(M)] − ab`; together with `ab` such a
/// path closes an alternating cycle, and conversely.
pub fn alternating_cycle(g: &Graph, m: &EdgeSet) -> Result<Option<Vec<usize>>> {
    let m = Matching::new(g, m.clone())?;
    let active = m.saturated.to_bits(g.vertex_count());
    for e in m.edges.iter() {
        let (a, b) = g.edge(e);
        let mut search = Blossom::new(g, active.clone());
        for f in m.edges.iter().filter(|&f| f != e) {
            let (u, v) = g.edge(f);
            search.mate[u] = Some(v);
            search.mate[v] = Some(u);
        }
        search.skip = Some((a, b));
        if let Some(path) = search.augmenting_path(a) {
            debug_assert_eq!(path.last(), Some(&b));
            // b … a reversed walk closed by the M-edge ab
            let mut cycle = vec![b];
            cycle.extend(path.iter().take(path.len() - 1));
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

/// `M` is the only perfect matching of the subgraph spanned by `V(M)`.
pub fn is_uniquely_restricted(g: &Graph, m: &EdgeSet) -> Result<bool> {
    Ok(alternating_cycle(g, m)?.is_none())
}

/// Some maximum matching containing `m` (the lexicographically least),
/// or `None` when `m` extends to none.
pub fn extendable_to_maximum(g: &Graph, m: &EdgeSet) -> Result<Option<Matching>> {
    Matching::new(g, m.clone())?;
    Ok(
        least_maximum_within(g, &Bits::full(g.vertex_count()), m)
            .map(|edges| Matching::new(g, edges).expect("extension is a matching")),
    )
}
