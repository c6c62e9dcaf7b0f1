//! Degree- and eccentricity-based indices.
//!
//! All five functionals are exact integer sums over vertices:
//! first Zagreb `M1 = sum d1^2`, first leap Zagreb `LM1 = sum d2^2`,
//! eccentricity sum `theta = sum e`, eccentric connectivity `xiC = sum d1*e`
//! and leap eccentric connectivity `LxiC = sum d2*e`.

use serde::{Deserialize, Serialize};

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// All indices of one connected graph plus the auxiliary counts the closed
/// forms are written in.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub n: i64,
    pub m: i64,
    #[serde(rename = "M1")]
    pub m1: i64,
    #[serde(rename = "LM1")]
    pub lm1: i64,
    pub theta: i64,
    #[serde(rename = "xiC")]
    pub xi_c: i64,
    #[serde(rename = "LxiC")]
    pub lxi_c: i64,
    pub sum_d2: i64,
}

pub fn first_zagreb(g: &Graph) -> i64 {
    (0..g.n()).map(|v| (g.degree(v) as i64).pow(2)).sum()
}

pub fn first_leap_zagreb(g: &Graph) -> Result<i64> {
    Ok(index_report(g)?.lm1)
}

pub fn eccentricity_sum(g: &Graph) -> Result<i64> {
    Ok(index_report(g)?.theta)
}

pub fn ecc_connectivity(g: &Graph) -> Result<i64> {
    Ok(index_report(g)?.xi_c)
}

pub fn leap_ecc_connectivity(g: &Graph) -> Result<i64> {
    Ok(index_report(g)?.lxi_c)
}

pub fn index_report(g: &Graph) -> Result<IndexReport> {
    index_report_with(g, &all_pairs_distances(g))
}

/// Same as [`index_report`] with a precomputed distance matrix for `g`.
pub fn index_report_with(g: &Graph, d: &DistanceMatrix) -> Result<IndexReport> {
    debug_assert_eq!(g.n(), d.n());
    let mut r = IndexReport { n: g.n() as i64, m: g.m() as i64, ..IndexReport::default() };
    for v in 0..g.n() {
        let e = d.eccentricity(v).ok_or(Error::DisconnectedGraph)? as i64;
        let d1 = g.degree(v) as i64;
        let d2 = d.count_at(v, 2) as i64;
        r.m1 += d1 * d1;
        r.lm1 += d2 * d2;
        r.theta += e;
        r.xi_c += d1 * e;
        r.lxi_c += d2 * e;
        r.sum_d2 += d2;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zagreb_examples() {
        assert_eq!(first_zagreb(&Graph::cycle(4)), 16);
        assert_eq!(first_zagreb(&Graph::star(3)), 12);
        assert_eq!(first_zagreb(&Graph::complete(1)), 0);
    }

    #[test]
    fn leap_zagreb_examples() {
        assert_eq!(first_leap_zagreb(&Graph::complete(6)).unwrap(), 0);
        assert_eq!(first_leap_zagreb(&Graph::cycle(5)).unwrap(), 20);
        assert_eq!(first_leap_zagreb(&Graph::path(4)).unwrap(), 4);
    }

    #[test]
    fn eccentric_examples() {
        assert_eq!(eccentricity_sum(&Graph::cycle(4)).unwrap(), 8);
        assert_eq!(eccentricity_sum(&Graph::path(4)).unwrap(), 10);
        assert_eq!(eccentricity_sum(&Graph::complete(1)).unwrap(), 0);
        assert_eq!(ecc_connectivity(&Graph::cycle(4)).unwrap(), 16);
        assert_eq!(ecc_connectivity(&Graph::complete(2)).unwrap(), 2);
        assert_eq!(ecc_connectivity(&Graph::star(2)).unwrap(), 6);
        assert_eq!(leap_ecc_connectivity(&Graph::complete(5)).unwrap(), 0);
        assert_eq!(leap_ecc_connectivity(&Graph::cycle(4)).unwrap(), 8);
        assert_eq!(leap_ecc_connectivity(&Graph::path(4)).unwrap(), 10);
    }

    #[test]
    fn reports() {
        let c4 = index_report(&Graph::cycle(4)).unwrap();
        assert_eq!(
            c4,
            IndexReport { n: 4, m: 4, m1: 16, lm1: 4, theta: 8, xi_c: 16, lxi_c: 8, sum_d2: 4 }
        );
        let k2 = index_report(&Graph::complete(2)).unwrap();
        assert_eq!(
            k2,
            IndexReport { n: 2, m: 1, m1: 2, lm1: 0, theta: 2, xi_c: 2, lxi_c: 0, sum_d2: 0 }
        );
        let p4 = index_report(&Graph::path(4)).unwrap();
        assert_eq!(
            p4,
            IndexReport { n: 4, m: 3, m1: 10, lm1: 4, theta: 10, xi_c: 14, lxi_c: 10, sum_d2: 4 }
        );
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(index_report(&g), Err(Error::DisconnectedGraph));
        assert_eq!(leap_ecc_connectivity(&g), Err(Error::DisconnectedGraph));
    }
}
