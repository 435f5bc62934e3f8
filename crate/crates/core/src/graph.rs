//! Simple undirected graphs with named vertices and dense indices.
//!
//! A [`Graph`] is immutable once built. Vertices are addressed by index
//! (assigned in first-appearance order of the names handed to
//! [`Graph::build`]) and edges by id, where ids enumerate the index pairs
//! `(u, v)`, `u < v`, in lexicographic order.
//!
//! Sets of vertices and edges are kept sorted by index and compare
//! structurally. Whenever a set is shown to a human it goes through
//! [`Graph::vertex_names`] / [`Graph::edge_names`], which sort by name.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub(crate) fn to_bits(&self, capacity: usize) -> Bits {
        Bits::from_iter_cap(capacity, self.iter())
    }

    pub(crate) fn from_bits(bits: &Bits) -> VertexSet {
        VertexSet(bits.iter().collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

/// Sorted, duplicate-free set of edge ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(Vec<usize>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for EdgeSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

/// Bijection between the edges of a graph and the vertices of its line graph.
///
/// Only edges appear in the domain; isolated vertices of the source graph
/// have no image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineMap {
    forward: Vec<usize>,
    backward: Vec<usize>,
}

impl LineMap {
    /// Line-graph vertex representing edge `e` of the source graph.
    pub fn vertex_of(&self, e: usize) -> usize {
        self.forward[e]
    }

    /// Source edge represented by line-graph vertex `v`.
    pub fn edge_of(&self, v: usize) -> usize {
        self.backward[v]
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn image(&self, edges: &EdgeSet) -> VertexSet {
        edges.iter().map(|e| self.vertex_of(e)).collect()
    }

    pub fn preimage(&self, vertices: &VertexSet) -> EdgeSet {
        vertices.iter().map(|v| self.edge_of(v)).collect()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    rows: Vec<Bits>,
    edges: Vec<(usize, usize)>,
    // position of each vertex when vertices are sorted by name
    rank: Vec<usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &self.edge_names(&(0..self.edge_count()).collect()))
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex names and edges given by endpoint names.
    ///
    /// Repeated vertex names collapse onto the first occurrence.
    pub fn build<S: AsRef<str>>(vertex_names: &[S], edge_pairs: &[(S, S)]) -> Result<Graph> {
        let mut names: Vec<String> = Vec::new();
        let mut index = HashMap::new();
        for name in vertex_names {
            let name = name.as_ref();
            if !index.contains_key(name) {
                index.insert(name.to_string(), names.len());
                names.push(name.to_string());
            }
        }
        let mut pairs = Vec::with_capacity(edge_pairs.len());
        for (a, b) in edge_pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            pairs.push((u, v));
        }
        Graph::from_index_pairs(names, &pairs)
    }

    /// Builds a graph on `names.len()` vertices from index pairs.
    pub fn from_index_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Graph> {
        let n = names.len();
        let mut adj = vec![Vec::new(); n];
        let mut rows = vec![Bits::new(n); n];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::UnknownVertex(format!("#{x}")));
                }
            }
            if a == b {
                return Err(Error::LoopRejected(names[a].clone()));
            }
            if rows[a].contains(b) {
                return Err(Error::DuplicateEdge(names[a].clone(), names[b].clone()));
            }
            rows[a].insert(b);
            rows[b].insert(a);
            adj[a].push(b);
            adj[b].push(a);
            edges.push((a.min(b), a.max(b)));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        edges.sort_unstable();
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut rank = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            rank[v] = pos;
        }
        Ok(Graph {
            names,
            index,
            adj,
            rows,
            edges,
            rank,
        })
    }

    /// Graph on vertices named `0..n` with the given index pairs.
    pub fn numbered(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        Graph::from_index_pairs((0..n).map(|i| i.to_string()).collect(), pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Endpoints `(u, v)` with `u < v` of edge `e`.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Looks up an edge by endpoint names, in either orientation.
    pub fn edge_by_names(&self, a: &str, b: &str) -> Result<usize> {
        let unknown = || Error::UnknownEdge(format!("{a}-{b}"));
        let u = self.vertex(a).map_err(|_| unknown())?;
        let v = self.vertex(b).map_err(|_| unknown())?;
        self.edge_id(u, v).ok_or_else(unknown)
    }

    pub(crate) fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    /// Vertices listed in name order.
    pub(crate) fn name_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by_key(|&v| self.rank[v]);
        order
    }

    pub fn all_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).collect()
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|s| self.vertex(s.as_ref())).collect()
    }

    pub fn edge_set<S: AsRef<str>>(&self, pairs: &[(S, S)]) -> Result<EdgeSet> {
        pairs
            .iter()
            .map(|(a, b)| self.edge_by_names(a.as_ref(), b.as_ref()))
            .collect()
    }

    /// `u-v` with endpoints in name order.
    pub fn edge_name(&self, e: usize) -> String {
        let (u, v) = self.edges[e];
        let (a, b) = if self.rank[u] <= self.rank[v] { (u, v) } else { (v, u) };
        format!("{}-{}", self.names[a], self.names[b])
    }

    /// Names of the members of `set`, sorted lexicographically.
    pub fn vertex_names(&self, set: &VertexSet) -> Vec<String> {
        let mut out: Vec<String> = set.iter().map(|v| self.names[v].clone()).collect();
        out.sort();
        out
    }

    /// `u-v` names of the members of `set`, sorted lexicographically.
    pub fn edge_names(&self, set: &EdgeSet) -> Vec<String> {
        let mut out: Vec<String> = set.iter().map(|e| self.edge_name(e)).collect();
        out.sort();
        out
    }

    pub(crate) fn check_vertices(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.vertex_count()) {
            Some(v) => Err(Error::UnknownVertex(format!("#{v}"))),
            None => Ok(()),
        }
    }

    pub(crate) fn check_edges(&self, set: &EdgeSet) -> Result<()> {
        match set.iter().find(|&e| e >= self.edge_count()) {
            Some(e) => Err(Error::UnknownEdge(format!("#{e}"))),
            None => Ok(()),
        }
    }

    /// Open neighborhood `N(A)` (excluding `A`) or closed `N[A] = A ∪ N(A)`.
    pub fn neighborhood(&self, a: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_vertices(a)?;
        let bits = self.neighborhood_bits(&a.to_bits(self.vertex_count()), closed);
        Ok(VertexSet::from_bits(&bits))
    }

    pub(crate) fn neighborhood_bits(&self, a: &Bits, closed: bool) -> Bits {
        let mut out = Bits::new(self.vertex_count());
        for v in a.iter() {
            out.union_with(&self.rows[v]);
        }
        if closed {
            out.union_with(a);
        } else {
            out.difference_with(a);
        }
        out
    }

    /// Subgraph spanned by `x`, together with the old → new index map.
    ///
    /// New indices follow the old index order, so edge ids keep their
    /// relative order.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_vertices(x)?;
        let mut map = vec![None; self.vertex_count()];
        for (new, old) in x.iter().enumerate() {
            map[old] = Some(new);
        }
        let names = x.iter().map(|v| self.names[v].clone()).collect();
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let g = Graph::from_index_pairs(names, &pairs)?;
        Ok((g, map))
    }

    /// `G − W − F`: removes the vertices in `w` (with their incident edges)
    /// and the edges in `f`.
    pub fn delete(&self, w: &VertexSet, f: &EdgeSet) -> Result<Graph> {
        self.check_vertices(w)?;
        self.check_edges(f)?;
        let keep = self.all_vertices().difference(w);
        let mut map = vec![None; self.vertex_count()];
        for (new, old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let names = keep.iter().map(|v| self.names[v].clone()).collect();
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !f.contains(*id))
            .filter_map(|(_, &(u, v))| Some((map[u]?, map[v]?)))
            .collect();
        Graph::from_index_pairs(names, &pairs)
    }

    /// The cut `(A, B)`: edges with one endpoint in each side.
    pub fn cut_set(&self, a: &VertexSet, b: &VertexSet) -> Result<EdgeSet> {
        self.check_vertices(a)?;
        self.check_vertices(b)?;
        if a.is_empty() || b.is_empty() || a.iter().any(|v| b.contains(v)) {
            return Err(Error::InvalidCutSides);
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| {
                (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))
            })
            .map(|(id, _)| id)
            .collect())
    }

    /// Line graph: one vertex per edge, adjacent when the edges share an
    /// endpoint. Line-graph vertex `i` is edge `i`, named `u-v`.
    pub fn line_graph(&self) -> (Graph, LineMap) {
        let m = self.edge_count();
        let names = (0..m).map(|e| self.edge_name(e)).collect();
        let mut pairs = Vec::new();
        for v in 0..self.vertex_count() {
            let incident: Vec<usize> = self.adj[v]
                .iter()
                .map(|&w| self.edge_id(v, w).expect("adjacent pair is an edge"))
                .collect();
            for (i, &e) in incident.iter().enumerate() {
                for &f in &incident[i + 1..] {
                    pairs.push((e, f));
                }
            }
        }
        // two distinct edges of a simple graph share at most one endpoint
        let lg = Graph::from_index_pairs(names, &pairs).expect("line graph is simple");
        let identity: Vec<usize> = (0..m).collect();
        (
            lg,
            LineMap {
                forward: identity.clone(),
                backward: identity,
            },
        )
    }

    /// A proper 2-colouring when one exists. Each component's smallest
    /// vertex lands in the first part.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let left = (0..n).filter(|&v| color[v] == Some(false)).collect();
        let right = (0..n).filter(|&v| color[v] == Some(true)).collect();
        Some((left, right))
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Same graph with vertex `v` moved to position `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n);
        let mut names = vec![String::new(); n];
        for v in 0..n {
            names[perm[v]] = self.names[v].clone();
        }
        let pairs: Vec<(usize, usize)> =
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_index_pairs(names, &pairs).expect("relabeling preserves simplicity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::graph;

    fn fig1() -> Graph {
        graph("a-b b-c c-d d-e c-g g-f f-e")
    }

    fn assert_invariants(g: &Graph) {
        for u in 0..g.vertex_count() {
            assert!(!g.has_edge(u, u));
            for &v in g.neighbors(u) {
                assert!(g.neighbors(v).contains(&u));
            }
        }
        assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            assert!(u < v);
            assert_eq!(g.edge_id(u, v), Some(id));
        }
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn build_k2() {
        let g = Graph::build(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_by_names("b", "a").unwrap(), 0);
        assert_invariants(&g);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::build(&["a"], &[("a", "a")]),
            Err(Error::LoopRejected("a".into()))
        );
        assert!(matches!(
            Graph::build(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::DuplicateEdge(..))
        ));
        assert_eq!(
            Graph::build(&["a"], &[("a", "z")]),
            Err(Error::UnknownVertex("z".into()))
        );
    }

    #[test]
    fn fig1_has_seven_edges() {
        let g = fig1();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 7);
        assert_invariants(&g);
    }

    #[test]
    fn neighborhoods() {
        let g = fig1();
        let eg = g.vertex_set(&["e", "g"]).unwrap();
        let closed = g.neighborhood(&eg, true).unwrap();
        assert_eq!(g.vertex_names(&closed), ["c", "d", "e", "f", "g"]);
        let open = g.neighborhood(&eg, false).unwrap();
        assert_eq!(g.vertex_names(&open), ["c", "d", "f"]);
        assert!(g.neighborhood(&VertexSet::new(), false).unwrap().is_empty());

        let k2 = graph("a-b");
        let a = k2.vertex_set(&["a"]).unwrap();
        assert_eq!(k2.vertex_names(&k2.neighborhood(&a, false).unwrap()), ["b"]);
        assert!(matches!(
            k2.neighborhood(&VertexSet::from([5]), true),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn induced_five_cycle() {
        let g = fig1();
        let x = g.vertex_set(&["c", "d", "e", "f", "g"]).unwrap();
        let (h, map) = g.induced_subgraph(&x).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 5);
        assert!((0..5).all(|v| h.degree(v) == 2));
        assert!(h.is_connected());
        assert_eq!(map[g.vertex("a").unwrap()], None);
        assert_eq!(
            h.edge_names(&(0..5).collect()),
            ["c-d", "c-g", "d-e", "e-f", "f-g"]
        );

        let (same, _) = g.induced_subgraph(&g.all_vertices()).unwrap();
        assert_eq!(same, g);
        let (empty, _) = g.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(empty.vertex_count(), 0);
    }

    #[test]
    fn deletions() {
        let k3 = graph("a-b b-c a-c");
        let k2 = k3.delete(&VertexSet::from([0]), &EdgeSet::new()).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));

        let c4 = graph("a-b b-c c-d d-a");
        let p4 = c4.delete(&VertexSet::new(), &EdgeSet::from([0])).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.is_connected());
        let mut degrees: Vec<usize> = (0..4).map(|v| p4.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, [1, 1, 2, 2]);

        let g = fig1();
        let h = g.delete(&g.vertex_set(&["a", "b"]).unwrap(), &EdgeSet::new()).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(
            h.edge_names(&(0..h.edge_count()).collect()),
            ["c-d", "c-g", "d-e", "e-f", "f-g"]
        );
        assert!(matches!(
            g.delete(&VertexSet::new(), &EdgeSet::from([99])),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn cuts() {
        let g = graph("x-z y-z y-v y-u z-v z-u v-u");
        let a = g.vertex_set(&["x", "y"]).unwrap();
        let b = g.vertex_set(&["z", "v", "u"]).unwrap();
        let cut = g.cut_set(&a, &b).unwrap();
        assert_eq!(g.edge_names(&cut), ["u-y", "v-y", "x-z", "y-z"]);
        assert!(!cut.contains(g.edge_by_names("u", "v").unwrap()));

        let p3 = graph("a-b b-c");
        let cut = p3
            .cut_set(&p3.vertex_set(&["a"]).unwrap(), &p3.vertex_set(&["c"]).unwrap())
            .unwrap();
        assert!(cut.is_empty());
        assert_eq!(
            p3.cut_set(&VertexSet::from([0]), &VertexSet::from([0, 1])),
            Err(Error::InvalidCutSides)
        );
        assert_eq!(
            p3.cut_set(&VertexSet::new(), &VertexSet::from([1])),
            Err(Error::InvalidCutSides)
        );
    }

    #[test]
    fn line_graphs() {
        let (l, map) = graph("a-b b-c").line_graph();
        assert_eq!((l.vertex_count(), l.edge_count()), (2, 1));
        assert_eq!(map.len(), 2);

        let (l, _) = graph("a-b a-c a-d").line_graph();
        assert_eq!((l.vertex_count(), l.edge_count()), (3, 3));

        let (l, _) = graph("a-b b-c c-d d-a").line_graph();
        assert_eq!((l.vertex_count(), l.edge_count()), (4, 4));
        assert!((0..4).all(|v| l.degree(v) == 2));
        assert!(l.is_connected());

        let isolated = Graph::build(&["a", "b", "z"], &[("a", "b")]).unwrap();
        let (l, map) = isolated.line_graph();
        assert_eq!((l.vertex_count(), map.len()), (1, 1));
        assert_eq!(l.name(0), "a-b");
    }

    #[test]
    fn bipartiteness() {
        let (l, r) = graph("a-b b-c c-d").is_bipartite().unwrap();
        assert_eq!((l.len(), r.len()), (2, 2));
        assert!(graph("a-b b-c a-c").is_bipartite().is_none());
        let ladder = graph("u1-u2 u2-u3 t1-t2 t2-t3 u1-t1 u2-t2 u3-t3");
        let (l, r) = ladder.is_bipartite().unwrap();
        assert_eq!(l.union(&r), ladder.all_vertices());
        for (u, v) in ladder.edges() {
            assert_ne!(l.contains(*u), l.contains(*v));
        }
    }
}
