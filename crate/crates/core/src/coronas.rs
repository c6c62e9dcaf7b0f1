//! Double coronas `G^(X) o {H1, H2}` for `X` in `S`, `Q`, `R`, `T`.
//!
//! Layout: the `n + m` vertices of `X(G)` (see [`crate::constructions`]),
//! then `n` copies of `H1` (copy `i` hangs off original vertex `i`), then `m`
//! copies of `H2` (copy `j` hangs off the vertex of edge `j`). Copies are
//! contiguous and ordered by copy index, then by the vertex index inside `H`.

use serde::{Deserialize, Serialize};

use crate::compositions::JoinParams;
use crate::constructions::{derive, DerivedGraph, DerivedKind};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::predicates::is_connected;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum CoronaTag {
    GOriginal { v: usize },
    GEdge { e: usize, ends: (usize, usize) },
    H1Copy { i: usize, u: usize },
    H2Copy { j: usize, u: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaGraph {
    pub kind: DerivedKind,
    pub graph: Graph,
    pub provenance: Vec<CoronaTag>,
    pub params: JoinParams,
    /// The inputs, kept so per-class tables can be evaluated from the corona alone.
    pub base: Graph,
    pub h1: Graph,
    pub h2: Graph,
}

pub fn double_corona(kind: DerivedKind, g: &Graph, h1: &Graph, h2: &Graph) -> Result<CoronaGraph> {
    if kind == DerivedKind::Line {
        return Err(Error::InvalidKind("double corona needs S, Q, R or T".into()));
    }
    if g.n() == 0 {
        return Err(Error::GraphTooSmall { input: "g", min: 1 });
    }
    if !is_connected(g) {
        return Err(Error::DisconnectedInput("g"));
    }
    if h1.n() == 0 {
        return Err(Error::EmptyH("h1"));
    }
    if h2.n() == 0 {
        return Err(Error::EmptyH("h2"));
    }
    let derived = derive(kind, g);
    let (n, m, n1, n2) = (g.n(), g.m(), h1.n(), h2.n());
    let h1_off = n + m;
    let h2_off = h1_off + n * n1;
    let mut b = GraphBuilder::new(h2_off + m * n2);
    b.add_graph_at(&derived.graph, 0).expect("in range");
    let mut provenance: Vec<CoronaTag> = derived
        .provenance
        .iter()
        .map(|p| match *p {
            crate::constructions::Provenance::Original { v } => CoronaTag::GOriginal { v },
            crate::constructions::Provenance::EdgeVertex { e, ends } => CoronaTag::GEdge { e, ends },
        })
        .collect();
    for i in 0..n {
        let off = h1_off + i * n1;
        b.add_graph_at(h1, off).expect("in range");
        for u in 0..n1 {
            b.add_edge(i, off + u).expect("in range");
            provenance.push(CoronaTag::H1Copy { i, u });
        }
    }
    for j in 0..m {
        let off = h2_off + j * n2;
        b.add_graph_at(h2, off).expect("in range");
        for u in 0..n2 {
            b.add_edge(n + j, off + u).expect("in range");
            provenance.push(CoronaTag::H2Copy { j, u });
        }
    }
    Ok(CoronaGraph {
        kind,
        graph: b.build(),
        provenance,
        params: JoinParams { n, m, n1, m1: h1.m(), n2, m2: h2.m() },
        base: g.clone(),
        h1: h1.clone(),
        h2: h2.clone(),
    })
}

impl CoronaGraph {
    /// The base derived graph `X(G)` rebuilt from the stored input.
    pub fn base_derived(&self) -> DerivedGraph {
        derive(self.kind, &self.base)
    }

    /// Index in `X(G)` of the vertex a corona vertex is attached to (itself for
    /// base vertices).
    pub fn anchor(&self, tag: CoronaTag) -> usize {
        match tag {
            CoronaTag::GOriginal { v } | CoronaTag::H1Copy { i: v, .. } => v,
            CoronaTag::GEdge { e, .. } | CoronaTag::H2Copy { j: e, .. } => self.params.n + e,
        }
    }
}

/// Second degrees of the double corona as given by the closed-form case table,
/// one entry per corona vertex, in corona index order. Second degrees inside
/// `X(G)` come from BFS on `X(G)` itself, never on the corona.
pub fn corona_d2_table(c: &CoronaGraph) -> Vec<(CoronaTag, i64)> {
    let x = c.base_derived();
    corona_d2_table_with(c, &all_pairs_distances(&x.graph))
}

pub fn corona_d2_table_with(c: &CoronaGraph, base_dist: &DistanceMatrix) -> Vec<(CoronaTag, i64)> {
    let p = c.params;
    let (n1, n2) = (p.n1 as i64, p.n2 as i64);
    let g = &c.base;
    let edges = g.edges();
    let d1g = |v: usize| g.degree(v) as i64;
    let d1l = |(a, b): (usize, usize)| (g.degree(a) + g.degree(b)) as i64 - 2;
    let d2x = |x: usize| base_dist.count_at(x, 2) as i64;
    c.provenance
        .iter()
        .map(|&tag| {
            let claimed = match (c.kind, tag) {
                (DerivedKind::S, CoronaTag::GOriginal { v }) => (n2 + 1) * d1g(v),
                (DerivedKind::Q, CoronaTag::GOriginal { v }) => d2x(v) + n2 * d1g(v),
                (DerivedKind::R | DerivedKind::T, CoronaTag::GOriginal { v }) => {
                    d2x(v) + n2 * d1g(v) + n1 * d1g(v)
                }
                (DerivedKind::S, CoronaTag::GEdge { ends, .. }) => 2 * n1 + d1l(ends),
                (DerivedKind::Q | DerivedKind::T, CoronaTag::GEdge { e, ends }) => {
                    d2x(p.n + e) + 2 * n1 + n2 * d1l(ends)
                }
                (DerivedKind::R, CoronaTag::GEdge { e, .. }) => d2x(p.n + e) + 2 * n1,
                (DerivedKind::S | DerivedKind::Q, CoronaTag::H1Copy { i, u }) => {
                    (n1 - 1) - c.h1.degree(u) as i64 + d1g(i)
                }
                (DerivedKind::R | DerivedKind::T, CoronaTag::H1Copy { i, u }) => {
                    (n1 - 1) - c.h1.degree(u) as i64 + 2 * d1g(i)
                }
                (DerivedKind::S | DerivedKind::R, CoronaTag::H2Copy { u, .. }) => {
                    (n2 - 1) - c.h2.degree(u) as i64 + 2
                }
                (DerivedKind::Q | DerivedKind::T, CoronaTag::H2Copy { j, u }) => {
                    let ends = edges[j];
                    (n2 - 1) - c.h2.degree(u) as i64 + 2 + d1l(ends)
                }
                (DerivedKind::Line, _) => unreachable!("coronas are never built on line graphs"),
            };
            (tag, claimed)
        })
        .collect()
}

/// Eccentricities as given by the closed-form case table: the anchor's
/// eccentricity in `X(G)` plus 1 for base vertices and plus 2 for copies.
pub fn corona_ecc_table_with(c: &CoronaGraph, base_dist: &DistanceMatrix) -> Result<Vec<(CoronaTag, i64)>> {
    c.provenance
        .iter()
        .map(|&tag| {
            let a = c.anchor(tag);
            let e = base_dist.eccentricity(a).ok_or(Error::DisconnectedGraph)? as i64;
            let shift = match tag {
                CoronaTag::GOriginal { .. } | CoronaTag::GEdge { .. } => 1,
                _ => 2,
            };
            Ok((tag, e + shift))
        })
        .collect()
}
