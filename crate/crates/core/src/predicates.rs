//! Structural predicates used as applicability conditions.

use std::collections::VecDeque;

use serde::Serialize;

use crate::distance::{all_pairs_distances, DistanceMatrix, UNREACHABLE};
use crate::graph::Graph;

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

/// Graphs on at most one vertex count as connected.
pub fn is_connected(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.n()
}

/// Two-coloring by BFS over every component.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![u8::MAX; g.n()];
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Shortest cycle length via one BFS per root: a non-tree edge `(u, w)` closes
/// a closed walk of length `d(u) + d(w) + 1` through the root, and the minimum
/// over all roots is the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

/// `{C3, C4}`-free, realized as girth at least 5 (or acyclic).
///
/// The induced-subgraph and subgraph readings agree here: a triangle is always
/// induced, and a non-induced 4-cycle has a chord, which closes a triangle.
pub fn is_c3c4_free(g: &Graph) -> bool {
    match girth(g) {
        Girth::Acyclic => true,
        Girth::Cycle(len) => len >= 5,
    }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    !matches!(girth(g), Girth::Cycle(3))
}

/// `K_{1,n-1}` with `n >= 2`; `K_2` counts as the two-vertex star.
pub fn is_star(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 || g.m() != n - 1 {
        return false;
    }
    let centers = (0..n).filter(|&v| g.degree(v) == n - 1).count();
    centers >= 1 && (0..n).filter(|&v| g.degree(v) == 1).count() >= n - 1
}

/// Whether some vertex is adjacent to all others.
pub fn has_full_vertex(g: &Graph) -> bool {
    g.n() >= 2 && (0..g.n()).any(|v| g.degree(v) == g.n() - 1)
}

/// Every vertex attains its eccentricity at some pendant (degree-1) vertex.
/// Disconnected graphs return `false`.
pub fn pendant_ecc_property(g: &Graph) -> bool {
    pendant_ecc_property_with(g, &all_pairs_distances(g))
}

pub fn pendant_ecc_property_with(g: &Graph, d: &DistanceMatrix) -> bool {
    let pendants: Vec<usize> = (0..g.n()).filter(|&u| g.degree(u) == 1).collect();
    (0..g.n()).all(|v| match d.eccentricity(v) {
        Some(e) => pendants.iter().any(|&u| d.get(u, v) == e && d.get(u, v) != UNREACHABLE),
        None => false,
    })
}
