//! Subdivision vertex join, subdivision edge join and subdivision
//! vertex-edge join.
//!
//! Index layout: the `n` original vertices of `g`, then its `m` subdivision
//! vertices (lexicographic edge order), then the vertices of `h1`, then those
//! of `h2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::predicates::is_connected;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JoinKind {
    Vertex,
    Edge,
    VertexEdge,
}

impl fmt::Display for JoinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JoinKind::Vertex => "vertex",
            JoinKind::Edge => "edge",
            JoinKind::VertexEdge => "vertex-edge",
        })
    }
}

impl FromStr for JoinKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "vertex" => Ok(JoinKind::Vertex),
            "edge" => Ok(JoinKind::Edge),
            "vertex-edge" => Ok(JoinKind::VertexEdge),
            other => Err(crate::error::Error::InvalidKind(format!("unknown join `{other}` (expected vertex|edge|vertex-edge)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum JoinTag {
    GOriginal { v: usize },
    GEdge { e: usize, ends: (usize, usize) },
    H1Vertex { u: usize },
    H2Vertex { u: usize },
}

/// Sizes of the inputs; `n2`/`m2` are zero for the two-graph joins.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinParams {
    pub n: usize,
    pub m: usize,
    pub n1: usize,
    pub m1: usize,
    pub n2: usize,
    pub m2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinGraph {
    pub kind: JoinKind,
    pub graph: Graph,
    pub provenance: Vec<JoinTag>,
    pub params: JoinParams,
}

fn check_inputs(g: &Graph, hs: &[(&'static str, &Graph)]) -> Result<()> {
    if !is_connected(g) {
        return Err(Error::DisconnectedInput("g"));
    }
    if g.n() < 2 {
        return Err(Error::GraphTooSmall { input: "g", min: 2 });
    }
    for &(name, h) in hs {
        if h.n() == 0 {
            return Err(Error::EmptyH(name));
        }
        if !is_connected(h) {
            return Err(Error::DisconnectedInput(name));
        }
    }
    Ok(())
}

fn build(kind: JoinKind, g: &Graph, h1: &Graph, h2: Option<&Graph>) -> JoinGraph {
    let (n, m, n1) = (g.n(), g.m(), h1.n());
    let n2 = h2.map_or(0, Graph::n);
    let edges = g.edges();
    let h1_off = n + m;
    let h2_off = h1_off + n1;
    let mut b = GraphBuilder::new(h2_off + n2);
    for (j, &(u, v)) in edges.iter().enumerate() {
        b.add_edge(u, n + j).expect("in range");
        b.add_edge(v, n + j).expect("in range");
    }
    b.add_graph_at(h1, h1_off).expect("in range");
    // Which side of S(g) is joined to h1.
    let h1_anchor = match kind {
        JoinKind::Vertex | JoinKind::VertexEdge => 0..n,
        JoinKind::Edge => n..n + m,
    };
    for x in h1_anchor {
        for u in 0..n1 {
            b.add_edge(x, h1_off + u).expect("in range");
        }
    }
    if let Some(h2) = h2 {
        b.add_graph_at(h2, h2_off).expect("in range");
        for x in n..n + m {
            for u in 0..n2 {
                b.add_edge(x, h2_off + u).expect("in range");
            }
        }
    }
    let provenance = (0..n)
        .map(|v| JoinTag::GOriginal { v })
        .chain(edges.iter().enumerate().map(|(e, &ends)| JoinTag::GEdge { e, ends }))
        .chain((0..n1).map(|u| JoinTag::H1Vertex { u }))
        .chain((0..n2).map(|u| JoinTag::H2Vertex { u }))
        .collect();
    JoinGraph {
        kind,
        graph: b.build(),
        provenance,
        params: JoinParams { n, m, n1, m1: h1.m(), n2, m2: h2.map_or(0, Graph::m) },
    }
}

/// `S(g)` with every original vertex joined to every vertex of `h`.
pub fn sd_vertex_join(g: &Graph, h: &Graph) -> Result<JoinGraph> {
    check_inputs(g, &[("h", h)])?;
    Ok(build(JoinKind::Vertex, g, h, None))
}

/// `S(g)` with every subdivision vertex joined to every vertex of `h`.
pub fn sd_edge_join(g: &Graph, h: &Graph) -> Result<JoinGraph> {
    check_inputs(g, &[("h", h)])?;
    Ok(build(JoinKind::Edge, g, h, None))
}

/// `S(g)` with originals joined to all of `h1` and subdivision vertices joined
/// to all of `h2`.
pub fn sd_vertex_edge_join(g: &Graph, h1: &Graph, h2: &Graph) -> Result<JoinGraph> {
    check_inputs(g, &[("h1", h1), ("h2", h2)])?;
    Ok(build(JoinKind::VertexEdge, g, h1, Some(h2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::eccentricities;
    use crate::invariants::leap_ecc_connectivity;

    #[test]
    fn vertex_join_counts_and_index() {
        let j = sd_vertex_join(&Graph::star(2), &Graph::complete(2)).unwrap();
        assert_eq!((j.graph.n(), j.graph.m()), (7, 11));
        // Hand BFS on the 7-vertex join.
        assert_eq!(leap_ecc_connectivity(&j.graph).unwrap(), 42);
        let ecc = eccentricities(&j.graph).unwrap().ecc;
        // center, two leaves, two edge vertices, two H vertices
        assert_eq!(ecc, vec![2, 3, 3, 3, 3, 2, 2]);
    }

    #[test]
    fn edge_join_counts() {
        let j = sd_edge_join(&Graph::star(2), &Graph::complete(2)).unwrap();
        assert_eq!((j.graph.n(), j.graph.m()), (7, 9));
        assert_eq!(leap_ecc_connectivity(&j.graph).unwrap(), 50);
    }

    #[test]
    fn vertex_edge_join_counts() {
        let k1 = Graph::complete(1);
        let j = sd_vertex_edge_join(&Graph::path(4), &k1, &k1).unwrap();
        assert_eq!((j.graph.n(), j.graph.m()), (9, 13));
        assert_eq!(leap_ecc_connectivity(&j.graph).unwrap(), 96);
        assert!(eccentricities(&j.graph).unwrap().ecc.iter().all(|&e| e == 3));
        assert_eq!(j.provenance[8], JoinTag::H2Vertex { u: 0 });
        assert_eq!(j.params, JoinParams { n: 4, m: 3, n1: 1, m1: 0, n2: 1, m2: 0 });
    }

    #[test]
    fn rejects_bad_inputs() {
        let disconnected = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let k2 = Graph::complete(2);
        assert_eq!(sd_vertex_join(&disconnected, &k2), Err(Error::DisconnectedInput("g")));
        assert_eq!(sd_edge_join(&k2, &disconnected), Err(Error::DisconnectedInput("h")));
        assert_eq!(sd_vertex_join(&k2, &Graph::empty(0)), Err(Error::EmptyH("h")));
        assert_eq!(
            sd_vertex_join(&Graph::complete(1), &k2),
            Err(Error::GraphTooSmall { input: "g", min: 2 })
        );
        assert_eq!(
            sd_vertex_edge_join(&k2, &k2, &disconnected),
            Err(Error::DisconnectedInput("h2"))
        );
    }
}
