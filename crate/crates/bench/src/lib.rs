//! Fixed inputs shared by the benchmarks.

use leapx::Graph;

/// A spread of small base graphs: paths, cycles, a star, a complete graph and
/// the paw.
pub fn base_graphs() -> Vec<(&'static str, Graph)> {
    ["P6", "C7", "S6", "K5", "paw", "K2,3"]
        .into_iter()
        .map(|name| (name, Graph::named(name).expect("known name")))
        .collect()
}
