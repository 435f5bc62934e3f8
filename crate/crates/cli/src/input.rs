use std::fs;
use std::io::{self, Read};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use lmss::format::{parse_edge_list, read_graph6};
use lmss::Graph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Edgelist,
    Graph6,
}

/// Reads `path` (or standard input for `-`) as text.
pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Every graph in the input: one for an edge list, one per record for
/// graph6.
pub fn load_graphs(path: &str, format: Format) -> Result<Vec<Graph>> {
    let text = read_text(path)?;
    let graphs = match format {
        Format::Edgelist => vec![parse_edge_list(&text).with_context(|| format!("parsing {path}"))?],
        Format::Graph6 => read_graph6(text.as_bytes())
            .collect::<lmss::Result<Vec<_>>>()
            .with_context(|| format!("parsing {path}"))?,
    };
    Ok(graphs)
}

pub fn load_graph(path: &str, format: Format) -> Result<Graph> {
    let mut graphs = load_graphs(path, format)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => bail!("{path} contains no graph"),
        k => bail!("{path} contains {k} graphs; this command takes one"),
    }
}
