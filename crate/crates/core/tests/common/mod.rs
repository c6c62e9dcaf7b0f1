//! Independent oracle for the integration tests: Floyd-Warshall on plain edge
//! lists, sharing no code with the library's BFS.

#![allow(dead_code)]

pub const INF: u32 = u32::MAX / 4;

pub fn floyd(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// `sum d2(v) * e(v)` straight from the distance matrix.
pub fn leap_ecc_connectivity(n: usize, edges: &[(usize, usize)]) -> i64 {
    let d = floyd(n, edges);
    (0..n)
        .map(|v| {
            let ecc = *d[v].iter().max().unwrap() as i64;
            let d2 = d[v].iter().filter(|&&x| x == 2).count() as i64;
            d2 * ecc
        })
        .sum()
}

pub fn eccentricities(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    floyd(n, edges).iter().map(|row| *row.iter().max().unwrap()).collect()
}

/// Subdivision built by hand: originals `0..n`, edge `j` becomes vertex `n + j`.
pub fn subdivide(n: usize, edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut out = Vec::new();
    for (j, &(u, v)) in edges.iter().enumerate() {
        out.push((u, n + j));
        out.push((n + j, v));
    }
    (n + edges.len(), out)
}
