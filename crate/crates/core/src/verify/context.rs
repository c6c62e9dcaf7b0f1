//! Per-instance cache of constructed graphs and their BFS data.
//!
//! Everything here is ground truth: each graph is built explicitly and every
//! distance comes from BFS on that graph.

use std::cell::OnceCell;

use crate::compositions::{sd_edge_join, sd_vertex_edge_join, sd_vertex_join, JoinGraph, JoinKind};
use crate::constructions::{derive, DerivedGraph, DerivedKind};
use crate::coronas::{double_corona, CoronaGraph};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::graph::Graph;
use crate::invariants::{index_report_with, IndexReport};
use crate::predicates::{
    has_full_vertex, is_bipartite, is_c3c4_free, is_connected, is_star, is_triangle_free,
    pendant_ecc_property_with,
};

/// A connected graph with its distances, eccentricities, second degrees and
/// index report.
#[derive(Debug, Clone)]
pub struct Built {
    pub graph: Graph,
    pub dist: DistanceMatrix,
    pub ecc: Vec<i64>,
    pub d2: Vec<i64>,
    pub report: IndexReport,
}

impl Built {
    /// Panics on a disconnected graph; callers check applicability first.
    pub fn new(graph: Graph) -> Self {
        let dist = all_pairs_distances(&graph);
        let ecc = (0..graph.n())
            .map(|v| dist.eccentricity(v).expect("connected graph") as i64)
            .collect();
        let d2 = (0..graph.n()).map(|v| dist.count_at(v, 2) as i64).collect();
        let report = index_report_with(&graph, &dist).expect("connected graph");
        Built { graph, dist, ecc, d2, report }
    }

    #[inline]
    pub fn d1(&self, v: usize) -> i64 {
        self.graph.degree(v) as i64
    }

    #[inline]
    pub fn d(&self, u: usize, v: usize) -> i64 {
        self.dist.get(u, v) as i64
    }
}

/// Cheap structural facts about the base graph.
#[derive(Debug, Clone, Copy)]
pub struct Facts {
    pub connected: bool,
    pub bipartite: bool,
    pub c3c4_free: bool,
    pub triangle_free: bool,
    pub star: bool,
    pub pendant: bool,
    pub full_vertex: bool,
}

pub struct Context<'a> {
    pub graphs: &'a [Graph],
    facts: OnceCell<Facts>,
    base: OnceCell<Built>,
    line: OnceCell<Built>,
    derived: [OnceCell<(DerivedGraph, Built)>; 4],
    joins: [OnceCell<JoinGraph>; 3],
    join_built: [OnceCell<Built>; 3],
    coronas: [OnceCell<CoronaGraph>; 4],
    corona_built: [OnceCell<Built>; 4],
}

fn kind_slot(kind: DerivedKind) -> usize {
    match kind {
        DerivedKind::S => 0,
        DerivedKind::Q => 1,
        DerivedKind::R => 2,
        DerivedKind::T => 3,
        DerivedKind::Line => panic!("line graph is cached separately"),
    }
}

fn join_slot(kind: JoinKind) -> usize {
    match kind {
        JoinKind::Vertex => 0,
        JoinKind::Edge => 1,
        JoinKind::VertexEdge => 2,
    }
}

impl<'a> Context<'a> {
    pub fn new(graphs: &'a [Graph]) -> Self {
        Context {
            graphs,
            facts: OnceCell::new(),
            base: OnceCell::new(),
            line: OnceCell::new(),
            derived: Default::default(),
            joins: Default::default(),
            join_built: Default::default(),
            coronas: Default::default(),
            corona_built: Default::default(),
        }
    }

    pub fn g(&self) -> &Graph {
        &self.graphs[0]
    }

    pub fn h1(&self) -> &Graph {
        &self.graphs[1]
    }

    pub fn h2(&self) -> &Graph {
        &self.graphs[2]
    }

    pub fn n(&self) -> i64 {
        self.g().n() as i64
    }

    pub fn m(&self) -> i64 {
        self.g().m() as i64
    }

    pub fn facts(&self) -> Facts {
        *self.facts.get_or_init(|| {
            let g = self.g();
            let connected = is_connected(g);
            let pendant = connected && pendant_ecc_property_with(g, &all_pairs_distances(g));
            Facts {
                connected,
                bipartite: is_bipartite(g),
                c3c4_free: is_c3c4_free(g),
                triangle_free: is_triangle_free(g),
                star: is_star(g),
                pendant,
                full_vertex: has_full_vertex(g),
            }
        })
    }

    pub fn base(&self) -> &Built {
        self.base.get_or_init(|| Built::new(self.g().clone()))
    }

    pub fn line(&self) -> &Built {
        self.line.get_or_init(|| Built::new(derive(DerivedKind::Line, self.g()).graph))
    }

    pub fn derived(&self, kind: DerivedKind) -> &(DerivedGraph, Built) {
        self.derived[kind_slot(kind)].get_or_init(|| {
            let d = derive(kind, self.g());
            let built = Built::new(d.graph.clone());
            (d, built)
        })
    }

    /// The join graph alone, without distances.
    pub fn join_graph(&self, kind: JoinKind) -> &JoinGraph {
        self.joins[join_slot(kind)].get_or_init(|| {
            match kind {
                JoinKind::Vertex => sd_vertex_join(self.g(), self.h1()),
                JoinKind::Edge => sd_edge_join(self.g(), self.h1()),
                JoinKind::VertexEdge => sd_vertex_edge_join(self.g(), self.h1(), self.h2()),
            }
            .expect("applicability checked before construction")
        })
    }

    pub fn join(&self, kind: JoinKind) -> (&JoinGraph, &Built) {
        let j = self.join_graph(kind);
        (j, self.join_built[join_slot(kind)].get_or_init(|| Built::new(j.graph.clone())))
    }

    /// The corona graph alone, without distances.
    pub fn corona_graph(&self, kind: DerivedKind) -> &CoronaGraph {
        self.coronas[kind_slot(kind)].get_or_init(|| {
            double_corona(kind, self.g(), self.h1(), self.h2()).expect("applicability checked before construction")
        })
    }

    pub fn corona(&self, kind: DerivedKind) -> (&CoronaGraph, &Built) {
        let c = self.corona_graph(kind);
        (c, self.corona_built[kind_slot(kind)].get_or_init(|| Built::new(c.graph.clone())))
    }
}
