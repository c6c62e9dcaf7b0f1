//! Immutable simple undirected graphs.

use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph on the vertex set `0..n`.
///
/// Neighbor lists are kept sorted, so two graphs with the same edge set compare
/// equal and every traversal order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either orientation)
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    ///
    /// This order fixes the index of every subdivision vertex in derived graphs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n(), "permutation length must equal n");
        let mut b = GraphBuilder::new(self.n());
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]).expect("permutation maps into range");
        }
        b.build()
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &edges).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("valid");
            }
        }
        b.build()
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edge_list(leaves + 1, &edges).expect("valid star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut builder = GraphBuilder::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                builder.add_edge(u, v).expect("valid");
            }
        }
        builder.build()
    }

    /// Parses the short names used by the CLI and the sweep families:
    /// `K<n>`, `P<n>`, `C<n>`, `S<n>` (star on n vertices), `K<a>,<b>`, `paw`.
    pub fn named(name: &str) -> Option<Self> {
        let name = name.trim();
        if name.eq_ignore_ascii_case("paw") {
            return Some(Self::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap());
        }
        let (head, rest) = name.split_at(name.char_indices().nth(1)?.0);
        if let Some((a, b)) = rest.split_once(',') {
            if head != "K" {
                return None;
            }
            let (a, b) = (a.parse().ok()?, b.parse().ok()?);
            return Some(Self::complete_bipartite(a, b));
        }
        let k: usize = rest.parse().ok()?;
        match head {
            "K" => Some(Self::complete(k)),
            "P" => Some(Self::path(k)),
            "C" if k >= 3 => Some(Self::cycle(k)),
            "S" if k >= 1 => Some(Self::star(k - 1)),
            _ => None,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Incremental builder used by every construction in the crate.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    /// Copies `h` into the vertex range starting at `offset`.
    pub fn add_graph_at(&mut self, h: &Graph, offset: usize) -> Result<()> {
        for (u, v) in h.edges() {
            self.add_edge(offset + u, offset + v)?;
        }
        Ok(())
    }

    pub fn build(mut self) -> Graph {
        let mut twice_m = 0;
        for nb in &mut self.adj {
            nb.sort_unstable();
            nb.dedup();
            twice_m += nb.len();
        }
        Graph { adj: self.adj, m: twice_m / 2 }
    }
}
