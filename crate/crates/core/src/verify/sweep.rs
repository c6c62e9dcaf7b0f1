//! Seeded sweeps of claims over graph families.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::claims::{find, registry, Claim};
use super::context::Context;
use super::outcome::{ClaimResult, Status};
use super::{describe, evaluate};
use crate::error::{Error, Result};
use crate::generate::{
    enumerate_connected_capped, random_bipartite_with, random_connected_with, random_girth5_with, random_tree_with,
    rng_for, EXHAUSTIVE_CAP,
};
use crate::graph::Graph;
use crate::predicates::is_star;

/// Largest `n` accepted by the random families.
pub const RANDOM_CAP: usize = 40;

const DEFAULT_SAMPLES: usize = 100;
const CHUNK: usize = 4096;

/// Where base graphs come from.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Every labeled connected graph with `n <= max_n`.
    AllConnected,
    Trees,
    NonstarTrees,
    Bipartite,
    Girth5,
    Connected,
    /// `K_{1,k}` for `k = 1..max_n`.
    Stars,
    Custom(Vec<Graph>),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::AllConnected => "all-connected",
            Family::Trees => "trees",
            Family::NonstarTrees => "nonstar-trees",
            Family::Bipartite => "bipartite",
            Family::Girth5 => "girth5",
            Family::Connected => "connected",
            Family::Stars => "stars",
            Family::Custom(_) => "custom",
        }
    }

    fn is_random(&self) -> bool {
        matches!(self, Family::Trees | Family::NonstarTrees | Family::Bipartite | Family::Girth5 | Family::Connected)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all-connected" => Family::AllConnected,
            "trees" => Family::Trees,
            "nonstar-trees" => Family::NonstarTrees,
            "bipartite" => Family::Bipartite,
            "girth5" => Family::Girth5,
            "connected" => Family::Connected,
            "stars" => Family::Stars,
            other => return Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        })
    }
}

/// `{K1, K2, P3, C4, K3}`.
pub fn default_h_family() -> Vec<(String, Graph)> {
    ["K1", "K2", "P3", "C4", "K3"]
        .into_iter()
        .map(|name| (name.to_string(), Graph::named(name).expect("built-in name")))
        .collect()
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Claim ids to run; empty means the whole registry.
    pub claims: Vec<String>,
    pub family: Family,
    pub max_n: usize,
    /// Random families: number of base graphs (default 100). Exhaustive
    /// families: optional seeded subsample.
    pub samples: Option<usize>,
    pub seed: u64,
    /// Named graphs for the `H` slots of arity-2 and arity-3 claims.
    pub h_family: Vec<(String, Graph)>,
    /// Exhaustive cap, never above [`EXHAUSTIVE_CAP`].
    pub cap: usize,
}

impl SweepConfig {
    pub fn new(family: Family, max_n: usize) -> Self {
        SweepConfig {
            claims: Vec::new(),
            family,
            max_n,
            samples: None,
            seed: 0,
            h_family: default_h_family(),
            cap: EXHAUSTIVE_CAP,
        }
    }

    pub fn claims<S: Into<String>>(mut self, ids: impl IntoIterator<Item = S>) -> Self {
        self.claims = ids.into_iter().map(Into::into).collect();
        self
    }

    pub fn samples(mut self, samples: usize) -> Self {
        self.samples = Some(samples);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub claim_id: String,
    pub instances: u64,
    pub equality_holds: u64,
    pub bound_holds: u64,
    pub strict: u64,
    pub violation: u64,
    pub not_applicable: u64,
    pub note: Option<String>,
}

impl ClaimTally {
    fn add(&mut self, status: Status) {
        self.instances += 1;
        match status {
            Status::EqualityHolds => self.equality_holds += 1,
            Status::BoundHolds => self.bound_holds += 1,
            Status::Strict => self.strict += 1,
            Status::Violation => self.violation += 1,
            Status::NotApplicable => self.not_applicable += 1,
        }
    }

    fn merge(&mut self, other: &ClaimTally) {
        self.instances += other.instances;
        self.equality_holds += other.equality_holds;
        self.bound_holds += other.bound_holds;
        self.strict += other.strict;
        self.violation += other.violation;
        self.not_applicable += other.not_applicable;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub family: String,
    pub max_n: usize,
    pub samples: Option<usize>,
    pub seed: u64,
    pub h_family: Vec<String>,
    pub base_graphs: u64,
    pub tallies: Vec<ClaimTally>,
    pub violations: Vec<ClaimResult>,
}

impl SweepReport {
    pub fn total_violations(&self) -> u64 {
        self.tallies.iter().map(|t| t.violation).sum()
    }

    pub fn tally(&self, id: &str) -> Option<&ClaimTally> {
        self.tallies.iter().find(|t| t.claim_id == id)
    }
}

fn resolve_claims(ids: &[String]) -> Result<Vec<&'static Claim>> {
    if ids.is_empty() {
        return Ok(registry().iter().collect());
    }
    ids.iter().map(|id| find(id).ok_or_else(|| Error::UnknownClaim(id.clone()))).collect()
}

fn random_base<R: Rng>(family: &Family, max_n: usize, rng: &mut R) -> Graph {
    let min_n = if *family == Family::NonstarTrees { 4 } else { 2 };
    let n = rng.random_range(min_n..=max_n);
    match family {
        Family::Trees => random_tree_with(n, rng),
        Family::NonstarTrees => loop {
            let t = random_tree_with(n, rng);
            if !is_star(&t) {
                break t;
            }
        },
        Family::Bipartite => {
            let a = rng.random_range(1..n);
            random_bipartite_with(a, n - a, 0.3, rng)
        }
        Family::Girth5 => random_girth5_with(n, 0.5, rng),
        Family::Connected => random_connected_with(n, 0.4, rng),
        _ => unreachable!("not a random family"),
    }
}

/// The base graphs of a sweep, in canonical order.
fn base_graphs(cfg: &SweepConfig) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    let family = &cfg.family;
    if family.is_random() {
        let floor = if *family == Family::NonstarTrees { 4 } else { 2 };
        if cfg.max_n < floor || cfg.max_n > RANDOM_CAP {
            return Err(Error::InvalidFamily(format!(
                "{family} needs {floor} <= max_n <= {RANDOM_CAP}, got {}",
                cfg.max_n
            )));
        }
        let mut rng = rng_for(cfg.seed);
        let graphs: Vec<Graph> =
            (0..cfg.samples.unwrap_or(DEFAULT_SAMPLES)).map(|_| random_base(family, cfg.max_n, &mut rng)).collect();
        return Ok(Box::new(graphs.into_iter()));
    }
    match family {
        Family::AllConnected => {
            let all = enumerate_connected_capped(cfg.max_n, cfg.cap)?;
            match cfg.samples {
                None => Ok(Box::new(all)),
                Some(k) => {
                    let all: Vec<Graph> = all.collect();
                    let mut picked = sample(&mut rng_for(cfg.seed), all.len(), k.min(all.len())).into_vec();
                    picked.sort_unstable();
                    Ok(Box::new(picked.into_iter().map(move |i| all[i].clone()).collect::<Vec<_>>().into_iter()))
                }
            }
        }
        Family::Stars => Ok(Box::new((1..cfg.max_n).map(Graph::star))),
        Family::Custom(list) => Ok(Box::new(list.clone().into_iter())),
        _ => unreachable!("random families handled above"),
    }
}

/// Per-base-graph outcome: tallies aligned with the claim list, plus violations.
type Partial = (Vec<ClaimTally>, Vec<(usize, ClaimResult)>);

fn run_base(g: &Graph, claims: &[&'static Claim], hs: &[(String, Graph)]) -> Partial {
    let mut tallies = vec![ClaimTally::default(); claims.len()];
    let mut violations = Vec::new();
    let mut record = |idx: usize, r: ClaimResult, tallies: &mut Vec<ClaimTally>| {
        tallies[idx].add(r.status);
        if r.status == Status::Violation {
            violations.push((idx, r));
        }
    };
    let max_arity = claims.iter().map(|c| c.arity).max().unwrap_or(1);
    for arity in 1..=max_arity {
        let idxs: Vec<usize> = (0..claims.len()).filter(|&i| claims[i].arity == arity).collect();
        if idxs.is_empty() {
            continue;
        }
        for tuple in h_tuples(hs, arity - 1) {
            let mut instance = Vec::with_capacity(arity);
            instance.push(g.clone());
            instance.extend(tuple.iter().map(|&k| hs[k].1.clone()));
            let ctx = Context::new(&instance);
            let desc = describe(&instance);
            for &i in &idxs {
                record(i, evaluate(claims[i], &ctx, desc.clone()), &mut tallies);
            }
        }
    }
    (tallies, violations)
}

/// Index tuples into `hs` of the given length, in lexicographic order.
fn h_tuples(hs: &[(String, Graph)], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..hs.len()).map(move |k| [t.clone(), vec![k]].concat())).collect();
    }
    out
}

/// Runs the configured claims over the family. Deterministic for a fixed
/// config regardless of thread scheduling.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let claims = resolve_claims(&cfg.claims)?;
    if claims.iter().any(|c| c.arity > 1) && cfg.h_family.is_empty() {
        return Err(Error::InvalidFamily("arity-2 and arity-3 claims need a nonempty h family".into()));
    }
    let mut tallies: Vec<ClaimTally> = claims
        .iter()
        .map(|c| ClaimTally { claim_id: c.id.to_string(), note: c.note.map(str::to_string), ..Default::default() })
        .collect();
    let mut violations: Vec<(usize, ClaimResult)> = Vec::new();
    let mut base_count = 0u64;

    let mut bases = base_graphs(cfg)?;
    loop {
        let chunk: Vec<Graph> = bases.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        base_count += chunk.len() as u64;
        let partials: Vec<Partial> = chunk.par_iter().map(|g| run_base(g, &claims, &cfg.h_family)).collect();
        for (t, v) in partials {
            for (acc, part) in tallies.iter_mut().zip(&t) {
                acc.merge(part);
            }
            violations.extend(v);
        }
    }
    violations.sort_by(|(a, ra), (b, rb)| a.cmp(b).then_with(|| ra.instance.cmp(&rb.instance)));

    Ok(SweepReport {
        family: cfg.family.name().to_string(),
        max_n: cfg.max_n,
        samples: if cfg.family.is_random() { Some(cfg.samples.unwrap_or(DEFAULT_SAMPLES)) } else { cfg.samples },
        seed: cfg.seed,
        h_family: cfg.h_family.iter().map(|(name, _)| name.clone()).collect(),
        base_graphs: base_count,
        tallies,
        violations: violations.into_iter().map(|(_, r)| r).collect(),
    })
}
