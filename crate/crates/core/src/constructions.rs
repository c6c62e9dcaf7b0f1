//! Line graph and the four subdivision-based derived graphs `S`, `Q`, `R`, `T`.
//!
//! Index layout: original vertex `v` keeps index `v`; the subdivision vertex of
//! the `j`-th edge (lexicographic order, see [`Graph::edges`]) gets index
//! `n + j`. In the line graph the `j`-th edge is vertex `j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphBuilder};

/// Where a vertex of a derived graph comes from in the base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Provenance {
    Original { v: usize },
    EdgeVertex { e: usize, ends: (usize, usize) },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DerivedKind {
    Line,
    S,
    Q,
    R,
    T,
}

impl DerivedKind {
    pub const SUBDIVISION_KINDS: [DerivedKind; 4] =
        [DerivedKind::S, DerivedKind::Q, DerivedKind::R, DerivedKind::T];
}

impl fmt::Display for DerivedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivedKind::Line => "line",
            DerivedKind::S => "S",
            DerivedKind::Q => "Q",
            DerivedKind::R => "R",
            DerivedKind::T => "T",
        })
    }
}

impl FromStr for DerivedKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "line" | "L" => Ok(DerivedKind::Line),
            "S" | "s" => Ok(DerivedKind::S),
            "Q" | "q" => Ok(DerivedKind::Q),
            "R" | "r" => Ok(DerivedKind::R),
            "T" | "t" => Ok(DerivedKind::T),
            other => Err(crate::error::Error::InvalidKind(format!("unknown construction `{other}` (expected line|S|Q|R|T)"))),
        }
    }
}

/// A graph built from a base graph together with per-vertex provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedGraph {
    pub kind: DerivedKind,
    pub graph: Graph,
    pub provenance: Vec<Provenance>,
    pub base_n: usize,
    pub base_m: usize,
}

impl DerivedGraph {
    /// Index of original vertex `v`, if the construction keeps originals.
    pub fn original_index(&self, v: usize) -> Option<usize> {
        (self.kind != DerivedKind::Line && v < self.base_n).then_some(v)
    }

    /// Index of the vertex standing for edge `j`.
    pub fn edge_index(&self, j: usize) -> usize {
        match self.kind {
            DerivedKind::Line => j,
            _ => self.base_n + j,
        }
    }
}

fn edge_provenance(edges: &[(usize, usize)]) -> impl Iterator<Item = Provenance> + '_ {
    edges.iter().enumerate().map(|(e, &ends)| Provenance::EdgeVertex { e, ends })
}

/// Adds line-graph adjacency among edge vertices placed at `offset + j`.
fn add_line_edges(b: &mut GraphBuilder, g: &Graph, edges: &[(usize, usize)], offset: usize) {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (j, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(j);
        incident[v].push(j);
    }
    for inc in &incident {
        for (i, &a) in inc.iter().enumerate() {
            for &c in &inc[i + 1..] {
                b.add_edge(offset + a, offset + c).expect("edge indices in range");
            }
        }
    }
}

fn add_incidence_edges(b: &mut GraphBuilder, edges: &[(usize, usize)], n: usize) {
    for (j, &(u, v)) in edges.iter().enumerate() {
        b.add_edge(u, n + j).expect("in range");
        b.add_edge(v, n + j).expect("in range");
    }
}

pub fn line_graph(g: &Graph) -> DerivedGraph {
    let edges = g.edges();
    let mut b = GraphBuilder::new(edges.len());
    add_line_edges(&mut b, g, &edges, 0);
    DerivedGraph {
        kind: DerivedKind::Line,
        graph: b.build(),
        provenance: edge_provenance(&edges).collect(),
        base_n: g.n(),
        base_m: g.m(),
    }
}

fn subdivision_family(g: &Graph, kind: DerivedKind) -> DerivedGraph {
    let n = g.n();
    let edges = g.edges();
    let mut b = GraphBuilder::new(n + edges.len());
    add_incidence_edges(&mut b, &edges, n);
    if matches!(kind, DerivedKind::R | DerivedKind::T) {
        b.add_graph_at(g, 0).expect("in range");
    }
    if matches!(kind, DerivedKind::Q | DerivedKind::T) {
        add_line_edges(&mut b, g, &edges, n);
    }
    let provenance =
        (0..n).map(|v| Provenance::Original { v }).chain(edge_provenance(&edges)).collect();
    DerivedGraph { kind, graph: b.build(), provenance, base_n: n, base_m: g.m() }
}

/// `S(G)`: every edge subdivided once.
pub fn subdivision(g: &Graph) -> DerivedGraph {
    subdivision_family(g, DerivedKind::S)
}

/// `Q(G)`: `S(G)` plus edges between subdivision vertices of adjacent edges.
pub fn q_graph(g: &Graph) -> DerivedGraph {
    subdivision_family(g, DerivedKind::Q)
}

/// `R(G)`: `G` with a triangle vertex added on every edge.
pub fn r_graph(g: &Graph) -> DerivedGraph {
    subdivision_family(g, DerivedKind::R)
}

/// `T(G)`: total graph, adjacency or incidence of vertices and edges.
pub fn total_graph(g: &Graph) -> DerivedGraph {
    subdivision_family(g, DerivedKind::T)
}

pub fn derive(kind: DerivedKind, g: &Graph) -> DerivedGraph {
    match kind {
        DerivedKind::Line => line_graph(g),
        other => subdivision_family(g, other),
    }
}

/// Splits a per-vertex quantity into its values on original vertices (indexed
/// by `v`) and on edge vertices (indexed by edge number).
pub fn split_by_provenance<T: Clone>(d: &DerivedGraph, values: &[T]) -> (Vec<T>, Vec<T>) {
    assert_eq!(values.len(), d.graph.n(), "one value per vertex of the derived graph");
    let mut originals = Vec::with_capacity(d.base_n);
    let mut edge_vertices = Vec::with_capacity(d.base_m);
    for (value, p) in values.iter().zip(&d.provenance) {
        match p {
            Provenance::Original { .. } => originals.push(value.clone()),
            Provenance::EdgeVertex { .. } => edge_vertices.push(value.clone()),
        }
    }
    (originals, edge_vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{all_pairs_distances, degree_vector, eccentricities};
    use crate::invariants::first_zagreb;
    use crate::predicates::is_connected;

    /// Cycle check by degrees and connectivity.
    fn is_cycle(g: &Graph, len: usize) -> bool {
        g.n() == len && g.m() == len && g.degrees().iter().all(|&d| d == 2) && is_connected(g)
    }

    #[test]
    fn line_graph_examples() {
        assert!(is_cycle(&line_graph(&Graph::cycle(4)).graph, 4));
        for leaves in 1..6 {
            let l = line_graph(&Graph::star(leaves)).graph;
            assert_eq!(l, Graph::complete(leaves));
        }
        assert_eq!(line_graph(&Graph::path(4)).graph, Graph::path(3));
    }

    #[test]
    fn subdivision_examples() {
        let c4 = Graph::cycle(4);
        assert!(is_cycle(&subdivision(&c4).graph, 8));
        assert!(is_cycle(&subdivision(&Graph::cycle(3)).graph, 6));
        let s_k2 = subdivision(&Graph::complete(2)).graph;
        assert_eq!(s_k2, Graph::from_edge_list(3, &[(0, 2), (1, 2)]).unwrap());
        let counts: Vec<_> = DerivedKind::SUBDIVISION_KINDS
            .iter()
            .map(|&k| {
                let d = derive(k, &c4);
                (d.graph.n(), d.graph.m())
            })
            .collect();
        assert_eq!(counts, vec![(8, 8), (8, 12), (8, 12), (8, 16)]);
    }

    #[test]
    fn edge_count_identities() {
        for g in [Graph::star(4), Graph::named("paw").unwrap(), Graph::complete(5), Graph::path(2)] {
            let m = g.m();
            let lm = first_zagreb(&g) as usize / 2 - m;
            assert_eq!(line_graph(&g).graph.m(), lm);
            assert_eq!(subdivision(&g).graph.m(), 2 * m);
            assert_eq!(q_graph(&g).graph.m(), 2 * m + lm);
            assert_eq!(r_graph(&g).graph.m(), 3 * m);
            assert_eq!(total_graph(&g).graph.m(), 3 * m + lm);
        }
    }

    #[test]
    fn provenance_layout() {
        let p3 = Graph::path(3);
        let t = total_graph(&p3);
        assert_eq!(t.provenance[1], Provenance::Original { v: 1 });
        assert_eq!(t.provenance[4], Provenance::EdgeVertex { e: 1, ends: (1, 2) });
        assert_eq!(t.edge_index(1), 4);
        assert_eq!(line_graph(&p3).edge_index(1), 1);
        assert_eq!(line_graph(&p3).original_index(0), None);
    }

    #[test]
    fn split_examples() {
        let c4 = Graph::cycle(4);
        let s = subdivision(&c4);
        let ecc = eccentricities(&s.graph).unwrap().ecc;
        assert_eq!(split_by_provenance(&s, &ecc), (vec![4; 4], vec![4; 4]));
        let d2 = degree_vector(&s.graph, 2).d_k;
        assert_eq!(split_by_provenance(&s, &d2), (vec![2; 4], vec![2; 4]));
        let r = r_graph(&c4);
        assert_eq!(split_by_provenance(&r, &r.graph.degrees()), (vec![4; 4], vec![2; 4]));
    }

    #[test]
    fn distances_in_s_double_those_in_g() {
        let g = Graph::named("paw").unwrap();
        let dg = all_pairs_distances(&g);
        let ds = all_pairs_distances(&subdivision(&g).graph);
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(ds.get(u, v), 2 * dg.get(u, v));
            }
        }
    }
}
