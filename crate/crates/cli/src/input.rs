//! Reading graphs from files, stdin and inline specs.

use std::fs;
use std::io::{self, Read};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use leapx::format::parse_graph6_lines;
use leapx::{parse_edge_list, parse_graph6, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

/// A graph with a label naming where it came from.
#[derive(Debug, Clone)]
pub struct Sourced {
    pub source: String,
    pub graph: Graph,
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        Ok(buf)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Every graph in the given files: one per line for graph6, one per file for
/// edge lists.
pub fn read_graphs(paths: &[String], format: InputFormat) -> Result<Vec<Sourced>> {
    let mut out = Vec::new();
    for path in paths {
        let text = read_source(path)?;
        match format {
            InputFormat::Graph6 => {
                let graphs = parse_graph6_lines(&text).with_context(|| format!("parsing {path}"))?;
                out.extend(
                    graphs.into_iter().enumerate().map(|(i, graph)| Sourced { source: format!("{path}:{}", i + 1), graph }),
                );
            }
            InputFormat::Edgelist => {
                let graph = parse_edge_list(&text).with_context(|| format!("parsing {path}"))?;
                out.push(Sourced { source: path.clone(), graph });
            }
        }
    }
    Ok(out)
}

/// A single graph given as `g6:<string>`, `name:<K4|P5|C6|S4|K2,3|paw>`, or a
/// file path (`-` for stdin) holding exactly one graph.
pub fn read_one(spec: &str, format: InputFormat) -> Result<Graph> {
    if let Some(s) = spec.strip_prefix("g6:") {
        return parse_graph6(s).with_context(|| format!("parsing `{spec}`"));
    }
    if let Some(name) = spec.strip_prefix("name:") {
        return Graph::named(name).with_context(|| format!("unknown graph name `{name}`"));
    }
    let mut graphs = read_graphs(&[spec.to_string()], format)?;
    if graphs.len() != 1 {
        bail!("{spec}: expected exactly one graph, found {}", graphs.len());
    }
    Ok(graphs.remove(0).graph)
}

/// Comma-separated named graphs, e.g. `K1,K2,P3`. Complete bipartite names
/// use `x` inside lists: `K2x3`.
pub fn named_list(list: &str) -> Result<Vec<(String, Graph)>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            let g = Graph::named(&name.replace('x', ",")).with_context(|| format!("unknown graph name `{name}`"))?;
            Ok((name.to_string(), g))
        })
        .collect()
}
