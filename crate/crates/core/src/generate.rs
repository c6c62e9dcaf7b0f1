//! Instance supply: exhaustive labeled enumeration and seeded random families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distance::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::predicates::is_connected;

/// Largest `n` accepted for exhaustive labeled enumeration (2^21 masks at n = 7).
pub const EXHAUSTIVE_CAP: usize = 7;

/// Deterministic RNG for a seed.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every labeled connected graph on `1..=n_max` vertices, once per adjacency
/// mask, ordered by `n` and then by mask. Isomorphic copies are not merged.
pub fn enumerate_connected(n_max: usize) -> Result<impl Iterator<Item = Graph>> {
    enumerate_connected_capped(n_max, EXHAUSTIVE_CAP)
}

pub fn enumerate_connected_capped(n_max: usize, cap: usize) -> Result<impl Iterator<Item = Graph>> {
    let cap = cap.min(EXHAUSTIVE_CAP);
    if n_max > cap {
        return Err(Error::CapExceeded { requested: n_max, cap });
    }
    Ok((1..=n_max).flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let masks = 1u64 << pairs.len();
        (0..masks).filter_map(move |mask| {
            let g = graph_from_mask(n, &pairs, mask);
            is_connected(&g).then_some(g)
        })
    }))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut b = GraphBuilder::new(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            b.add_edge(u, v).expect("pairs are in range");
        }
    }
    b.build()
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

/// Uniform labeled tree on `n` vertices (Prüfer decoding).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    random_tree_with(n, &mut rng_for(seed))
}

pub fn random_tree_with<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return Graph::complete(2);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut b = GraphBuilder::new(n);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        b.add_edge(leaf, c).expect("in range");
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    b.add_edge(rest[0], rest[1]).expect("two vertices remain");
    b.build()
}

/// Random spanning tree plus each remaining pair independently with
/// probability `p`; always connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    Ok(random_connected_with(n, p, &mut rng_for(seed)))
}

pub fn random_connected_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let tree = random_tree_with(n, rng);
    let mut b = GraphBuilder::new(n);
    b.add_graph_at(&tree, 0).expect("in range");
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.random_bool(p) {
                b.add_edge(u, v).expect("in range");
            }
        }
    }
    b.build()
}

/// Connected bipartite graph with parts `0..a` and `a..a+b`: a random spanning
/// tree of `K_{a,b}` plus each remaining cross pair with probability `p`.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    if (a == 0 || b == 0) && a + b > 1 {
        return Err(Error::InvalidFamily("connected bipartite graph needs both parts nonempty".into()));
    }
    Ok(random_bipartite_with(a, b, p, &mut rng_for(seed)))
}

pub fn random_bipartite_with<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let n = a + b;
    if a == 0 || b == 0 {
        debug_assert!(n <= 1);
        return Graph::empty(n);
    }
    let mut builder = GraphBuilder::new(n);
    let mut placed_a = vec![0];
    let mut placed_b = vec![a];
    builder.add_edge(0, a).expect("in range");
    let mut rest: Vec<usize> = (1..a).chain(a + 1..n).collect();
    rest.shuffle(rng);
    for v in rest {
        if v < a {
            let w = placed_b[rng.random_range(0..placed_b.len())];
            builder.add_edge(v, w).expect("in range");
            placed_a.push(v);
        } else {
            let w = placed_a[rng.random_range(0..placed_a.len())];
            builder.add_edge(v, w).expect("in range");
            placed_b.push(v);
        }
    }
    let tree = builder.clone().build();
    for u in 0..a {
        for v in a..n {
            if !tree.has_edge(u, v) && rng.random_bool(p) {
                builder.add_edge(u, v).expect("in range");
            }
        }
    }
    builder.build()
}

/// Connected graph of girth at least 5: a random tree, then candidate chords in
/// shuffled order, each kept with probability `p` when its endpoints are at
/// distance at least 4 (so every new cycle has length at least 5).
pub fn random_girth5(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    Ok(random_girth5_with(n, p, &mut rng_for(seed)))
}

pub fn random_girth5_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = random_tree_with(n, rng);
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if g.has_edge(u, v) || !rng.random_bool(p) {
            continue;
        }
        if all_pairs_distances(&g).get(u, v) >= 4 {
            let mut b = GraphBuilder::new(n);
            b.add_graph_at(&g, 0).expect("in range");
            b.add_edge(u, v).expect("in range");
            g = b.build();
        }
    }
    g
}
