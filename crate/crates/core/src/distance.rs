//! Breadth-first distances, eccentricities and k-th degrees.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Marker for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Exact unweighted all-pairs shortest-path distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, or [`UNREACHABLE`].
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    /// Eccentricity of `v`; `None` when some vertex is unreachable from `v`.
    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        let mut best = 0;
        for &d in self.row(v) {
            if d == UNREACHABLE {
                return None;
            }
            best = best.max(d);
        }
        Some(best)
    }

    /// `d_k(v)`: number of vertices at distance exactly `k` from `v`.
    pub fn count_at(&self, v: usize, k: u32) -> usize {
        self.row(v).iter().filter(|&&d| d == k).count()
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}

/// Per-vertex eccentricities with the diameter and the `V_e^alpha` classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub diameter: u32,
    /// Vertices of eccentricity 1 (adjacent to every other vertex).
    pub full_vertices: Vec<usize>,
    pub ecc_classes: BTreeMap<u32, Vec<usize>>,
}

impl EccentricityProfile {
    pub fn from_distances(d: &DistanceMatrix) -> Result<Self> {
        let ecc = (0..d.n())
            .map(|v| d.eccentricity(v).ok_or(Error::DisconnectedGraph))
            .collect::<Result<Vec<_>>>()?;
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let mut ecc_classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, &e) in ecc.iter().enumerate() {
            ecc_classes.entry(e).or_default().push(v);
        }
        let full_vertices = ecc_classes.get(&1).cloned().unwrap_or_default();
        Ok(EccentricityProfile { ecc, diameter, full_vertices, ecc_classes })
    }
}

pub fn eccentricities(g: &Graph) -> Result<EccentricityProfile> {
    EccentricityProfile::from_distances(&all_pairs_distances(g))
}

/// `d_k(v|G)` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeVector {
    pub k: u32,
    pub d_k: Vec<usize>,
}

/// Counts, for each vertex, the vertices at distance exactly `k` (within its
/// component when `g` is disconnected).
pub fn degree_vector(g: &Graph, k: u32) -> DegreeVector {
    assert!(k >= 1, "neighborhood radius must be positive");
    let d = all_pairs_distances(g);
    DegreeVector { k, d_k: (0..g.n()).map(|v| d.count_at(v, k)).collect() }
}
