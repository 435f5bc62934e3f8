//! The worked example graphs, loaded from the edge-list files under
//! `fixtures/`. Edges labelled in the drawings (`e1`, `e2`, ...) carry the
//! label as a trailing `# eN` comment in the file.

use crate::format::parse_edge_list;
use crate::graph::{EdgeSet, Graph};

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub source: &'static str,
}

macro_rules! fixture {
    ($name:ident) => {
        pub const $name: Fixture = Fixture {
            name: stringify!($name),
            source: include_str!(concat!("../../../../fixtures/", stringify!($name))),
        };
    };
}

fixture!(FIG1_W);
fixture!(FIG2_G);
fixture!(FIG2_H);
fixture!(FIG3_G);
fixture!(FIG4_G);
fixture!(FIG5_G);
fixture!(FIG6_G);
fixture!(FIG7_G);

pub const ALL: [Fixture; 8] = [
    FIG1_W, FIG2_G, FIG2_H, FIG3_G, FIG4_G, FIG5_G, FIG6_G, FIG7_G,
];

impl Fixture {
    pub fn graph(&self) -> Graph {
        parse_edge_list(self.source).expect("fixture files are well formed")
    }

    /// Edge carrying `label` in the drawing.
    pub fn labelled_edge(&self, g: &Graph, label: &str) -> Option<usize> {
        self.source.lines().find_map(|line| {
            let (pair, comment) = line.split_once('#')?;
            if comment.trim() != label {
                return None;
            }
            let mut it = pair.split_whitespace();
            g.edge_by_names(it.next()?, it.next()?).ok()
        })
    }

    /// Edge set from drawing labels; panics on an unknown label.
    pub fn labelled_edges(&self, g: &Graph, labels: &[&str]) -> EdgeSet {
        labels
            .iter()
            .map(|l| {
                self.labelled_edge(g, l)
                    .unwrap_or_else(|| panic!("{} has no edge {l}", self.name))
            })
            .collect()
    }
}
