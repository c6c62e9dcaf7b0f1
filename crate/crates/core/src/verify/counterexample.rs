//! Exhaustive search for the smallest graph refuting a universal property.

use serde::Serialize;

use crate::constructions::subdivision;
use crate::distance::all_pairs_distances;
use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::generate::enumerate_connected;
use crate::graph::Graph;
use crate::predicates::is_bipartite;

/// Refutable properties understood by [`find_counterexample`]. The id names
/// the prior statement `e(v|S(G)) = 2e(v|G)` for every vertex.
pub const PROPERTIES: &[&str] = &["yarahmadi-s-ecc"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    Bipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub property: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub vertex: usize,
    /// `e(v|G)`.
    pub ecc_g: u32,
    /// `e(v|S(G))`.
    pub ecc_s: u32,
    /// The value the property predicts for `e(v|S(G))`.
    pub expected: u32,
}

/// Smallest counterexample with `n <= max_n` over connected graphs, in
/// enumeration order.
pub fn find_counterexample(property: &str, max_n: usize) -> Result<Option<Counterexample>> {
    find_counterexample_in(property, max_n, None)
}

pub fn find_counterexample_in(
    property: &str,
    max_n: usize,
    restriction: Option<Restriction>,
) -> Result<Option<Counterexample>> {
    if !PROPERTIES.contains(&property) {
        return Err(Error::UnknownProperty(property.to_string()));
    }
    for g in enumerate_connected(max_n)? {
        if restriction == Some(Restriction::Bipartite) && !is_bipartite(&g) {
            continue;
        }
        if let Some(found) = s_ecc_doubling_failure(&g) {
            return Ok(Some(Counterexample { property: property.to_string(), ..found }));
        }
    }
    Ok(None)
}

fn s_ecc_doubling_failure(g: &Graph) -> Option<Counterexample> {
    let dg = all_pairs_distances(g);
    let ds = all_pairs_distances(&subdivision(g).graph);
    (0..g.n()).find_map(|v| {
        let ecc_g = dg.eccentricity(v)?;
        let ecc_s = ds.eccentricity(v)?;
        (ecc_s != 2 * ecc_g).then(|| Counterexample {
            property: String::new(),
            graph6: write_graph6(g).expect("enumerated graphs are small"),
            n: g.n(),
            m: g.m(),
            edges: g.edges(),
            vertex: v,
            ecc_g,
            ecc_s,
            expected: 2 * ecc_g,
        })
    })
}
