//! Isomorphism certificates.
//!
//! Vertices are first split into cells by iterated degree refinement (each
//! round colours a vertex by its old colour plus the multiset of its
//! neighbours' colours), which is invariant under relabeling. The
//! certificate is then the lexicographically least upper-triangle
//! adjacency string over all orderings that list the cells in colour
//! order, found by a branch-and-prune search over positions. The string is
//! emitted as graph6, so equal certificates mean isomorphic graphs and the
//! certificate itself decodes to the canonical representative.

use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;

/// Order up to which every graph is accepted regardless of symmetry.
pub const EXHAUSTIVE_LIMIT: usize = 10;

// 10!: the largest search space a graph on EXHAUSTIVE_LIMIT vertices can need
const SEARCH_BUDGET: u128 = 3_628_800;

pub fn canonical_certificate(g: &Graph) -> Result<Vec<u8>> {
    Ok(to_graph6(&canonical_form(g)?).into_bytes())
}

/// Same as [`canonical_certificate`] as a string (graph6 is ASCII).
pub fn canonical_string(g: &Graph) -> Result<String> {
    Ok(to_graph6(&canonical_form(g)?))
}

/// Canonical representative: vertex `v` of `g` moves to position
/// `labeling[v]` and vertices are renamed `0..n`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let labeling = canonical_labeling(g)?;
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (labeling[u], labeling[v]))
        .collect();
    Graph::numbered(g.vertex_count(), &pairs)
}

/// Position of each vertex in the canonical ordering.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let colors = refine(g);
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); k];
    for v in 0..n {
        cells[colors[v]].push(v);
    }
    if n > EXHAUSTIVE_LIMIT {
        let mut space: u128 = 1;
        for cell in &cells {
            for f in 2..=cell.len() as u128 {
                space = space.saturating_mul(f);
            }
        }
        if space > SEARCH_BUDGET {
            return Err(Error::TooLarge {
                n,
                max: EXHAUSTIVE_LIMIT,
            });
        }
    }
    let color_at: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, cell)| std::iter::repeat_n(c, cell.len()))
        .collect();
    let mut search = Search {
        g,
        cells: &cells,
        color_at,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        current: vec![false; n * n.saturating_sub(1) / 2],
        best: None,
        best_order: Vec::new(),
    };
    search.descend(0, false);
    let mut labeling = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        labeling[v] = pos;
    }
    Ok(labeling)
}

/// Stable colouring by iterated degree refinement. Colours are ranks of
/// signatures, hence invariant under relabeling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let mut classes = usize::from(n > 0);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            colors[v] = distinct.binary_search(&signatures[v]).unwrap();
        }
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    cells: &'a [Vec<usize>],
    color_at: Vec<usize>,
    used: Vec<bool>,
    order: Vec<usize>,
    current: Vec<bool>,
    best: Option<Vec<bool>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    /// Fills position `pos`. `tight` means the string so far equals the
    /// best string's prefix. Returns whether `best` changed.
    fn descend(&mut self, pos: usize, mut tight: bool) -> bool {
        let n = self.color_at.len();
        if pos == n {
            self.best = Some(self.current.clone());
            self.best_order = self.order.clone();
            return true;
        }
        let offset = pos * pos.saturating_sub(1) / 2;
        let mut changed = false;
        for &v in &self.cells[self.color_at[pos]] {
            if self.used[v] {
                continue;
            }
            for i in 0..pos {
                self.current[offset + i] = self.g.has_edge(self.order[i], v);
            }
            let child_tight = match (&self.best, tight) {
                (Some(best), true) => {
                    let segment = &self.current[offset..offset + pos];
                    match segment.cmp(&best[offset..offset + pos]) {
                        std::cmp::Ordering::Greater => continue,
                        std::cmp::Ordering::Less => false,
                        std::cmp::Ordering::Equal => true,
                    }
                }
                _ => false,
            };
            self.used[v] = true;
            self.order.push(v);
            if self.descend(pos + 1, child_tight) {
                // the new best extends this node's prefix
                changed = true;
                tight = true;
            }
            self.order.pop();
            self.used[v] = false;
        }
        changed
    }
}
