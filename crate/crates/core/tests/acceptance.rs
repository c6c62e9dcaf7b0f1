//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use leapx::generate::{random_bipartite, random_connected, random_tree, rng_for};
use leapx::verify::{check_claim, find_counterexample, find_counterexample_in, registry, Restriction, Status, PROPERTIES};
use leapx::{index_report, parse_graph6, sweep, write_graph6, Family, Graph, SweepConfig, SweepReport};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(cfg: &SweepConfig) -> Result<SweepReport, String> {
    sweep(cfg).map_err(|e| e.to_string())
}

fn no_violations(r: &SweepReport) -> Result<(), String> {
    match r.violations.first() {
        None => Ok(()),
        Some(v) => Err(format!("{} violated on {:?}", v.claim_id, v.instance)),
    }
}

fn structural() -> Outcome {
    let start = Instant::now();
    let ids = ["lem-2.2", "lem-2.4", "lem-4.1", "cnt-derived", "cnt-join", "cnt-vejoin", "cnt-corona"];
    let r = run(&SweepConfig::new(Family::AllConnected, 6).claims(ids))?;
    no_violations(&r)?;
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    let checked: u64 = r.tallies.iter().map(|t| t.instances - t.not_applicable).sum();
    Ok(format!("{} base graphs, {checked} checked instances, {:.1}s", r.base_graphs, elapsed.as_secs_f64()))
}

fn conditional_equalities() -> Outcome {
    let ids = ["lem-2.3", "lem-2.9.i", "lem-2.9.ii", "lem-2.13.i", "lem-2.13.ii", "lem-2.17.i", "lem-2.17.ii"];
    let r = run(&SweepConfig::new(Family::AllConnected, 6).claims(ids))?;
    no_violations(&r)?;
    for t in &r.tallies {
        ensure(t.equality_holds > 0 && t.strict > 0, || format!("{} lacks one side: {t:?}", t.claim_id))?;
        ensure(t.bound_holds == 0, || format!("{} reported plain bounds", t.claim_id))?;
    }
    // Hand-checked anchors: C4 strict 4 < 8, P4 tight 4 = 4.
    let c4 = check_claim("lem-2.3", &[Graph::cycle(4)]).map_err(|e| e.to_string())?;
    let p4 = check_claim("lem-2.3", &[Graph::path(4)]).map_err(|e| e.to_string())?;
    ensure(c4.status == Status::Strict && c4.lhs == Some(4) && c4.upper == Some(8), || format!("{c4:?}"))?;
    ensure(p4.status == Status::EqualityHolds && p4.lhs == Some(4) && p4.upper == Some(4), || format!("{p4:?}"))?;
    let lem = r.tally("lem-2.3").unwrap();
    Ok(format!("lem-2.3: {} tight, {} strict", lem.equality_holds, lem.strict))
}

fn sandwiches() -> Outcome {
    let ids = [
        "lem-2.1.i",
        "lem-2.1.ii",
        "lem-2.8.i",
        "lem-2.8.ii",
        "lem-2.12.i",
        "lem-2.12.ii",
        "lem-2.16.i",
        "lem-2.16.ii",
        "obs-2.1.bipartite",
    ];
    let r = run(&SweepConfig::new(Family::AllConnected, 6).claims(ids))?;
    no_violations(&r)?;
    let bip = r.tally("obs-2.1.bipartite").unwrap();
    let applicable = bip.instances - bip.not_applicable;
    ensure(applicable > 0 && bip.equality_holds == applicable, || format!("{bip:?}"))?;
    let r = run(&SweepConfig::new(Family::Bipartite, 12).samples(200).seed(11).claims(["obs-2.1.bipartite"]))?;
    no_violations(&r)?;
    Ok(format!("{applicable} bipartite instances with e(v|S) = 2e(v|G)"))
}

fn spot_values() -> Outcome {
    let c4 = Graph::cycle(4);
    let oracle_c4 = common::leap_ecc_connectivity(4, &c4.edges());
    let lib_c4 = index_report(&c4).map_err(|e| e.to_string())?.lxi_c;
    ensure(oracle_c4 == 8 && lib_c4 == 8, || format!("LxiC(C4): oracle {oracle_c4}, library {lib_c4}"))?;

    let (sn, se) = common::subdivide(4, &c4.edges());
    let oracle_s = common::leap_ecc_connectivity(sn, &se);
    let thm = check_claim("thm-2.5", &[c4]).map_err(|e| e.to_string())?;
    ensure(oracle_s == 64 && thm.lhs == Some(64) && thm.lower == Some(64), || format!("S(C4): {oracle_s} {thm:?}"))?;

    // K_{1,2} vertex-joined with K2, built by hand: originals 0..3, edge
    // vertices 3 (for 0-1) and 4 (for 0-2), H on 5 and 6.
    let mut join = vec![(0, 3), (3, 1), (0, 4), (4, 2), (5, 6)];
    join.extend([5, 6].iter().flat_map(|&h| (0..3).map(move |v| (v, h))));
    let oracle_join = common::leap_ecc_connectivity(7, &join);
    let t33 = check_claim("thm-3.3", &[Graph::star(2), Graph::complete(2)]).map_err(|e| e.to_string())?;
    ensure(
        oracle_join == 42 && t33.lhs == Some(42) && t33.upper == Some(42) && t33.status == Status::EqualityHolds,
        || format!("thm-3.3: oracle {oracle_join}, {t33:?}"),
    )?;

    // P4 with K1 on the originals (vertex 7) and K1 on the edge vertices (8).
    let mut ve = vec![(0, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 3)];
    ve.extend((0..4).map(|v| (v, 7)));
    ve.extend((4..7).map(|e| (e, 8)));
    let oracle_ve = common::leap_ecc_connectivity(9, &ve);
    let k1 = Graph::complete(1);
    let t313 = check_claim("thm-3.13", &[Graph::path(4), k1.clone(), k1]).map_err(|e| e.to_string())?;
    ensure(
        oracle_ve == 96 && t313.lhs == Some(96) && t313.upper == Some(96) && t313.status == Status::EqualityHolds,
        || format!("thm-3.13: oracle {oracle_ve}, {t313:?}"),
    )?;
    Ok("LxiC(C4)=8, LxiC(S(C4))=64 (lower 64), thm-3.3 = 42, thm-3.13 = 96".into())
}

fn counterexample() -> Outcome {
    let c = find_counterexample(PROPERTIES[0], 3).map_err(|e| e.to_string())?.ok_or("no counterexample at n <= 3")?;
    ensure(c.n == 3 && c.m == 3 && c.ecc_g == 1 && c.ecc_s == 3, || format!("{c:?}"))?;
    let none = find_counterexample_in(PROPERTIES[0], 6, Some(Restriction::Bipartite)).map_err(|e| e.to_string())?;
    ensure(none.is_none(), || format!("bipartite counterexample {none:?}"))?;
    Ok(format!("triangle {} at v{}: e(v|G)=1, e(v|S)=3; none bipartite up to n=6", c.graph6, c.vertex))
}

/// `(claim, graph6 instance)` rows of the findings tables.
fn documented() -> Vec<(String, Vec<String>)> {
    include_str!("../../../FINDINGS.md")
        .lines()
        .filter_map(|line| {
            let cells: Vec<&str> = line.split('|').map(str::trim).collect();
            let claim = cells.get(1)?;
            let inst = cells.get(2)?.split('`').nth(1)?;
            registry().iter().any(|c| c.id == *claim).then(|| {
                (claim.to_string(), inst.split_whitespace().map(str::to_string).collect())
            })
        })
        .collect()
}

fn theorem_audit() -> Outcome {
    let theorems: Vec<String> = registry()
        .iter()
        .filter(|c| c.id.starts_with("thm-") || c.id.starts_with("cor-"))
        .map(|c| c.id.to_string())
        .collect();
    let configs = [
        SweepConfig::new(Family::Stars, 9),
        SweepConfig::new(Family::NonstarTrees, 10).samples(40).seed(1),
        SweepConfig::new(Family::Girth5, 10).samples(40).seed(2),
        SweepConfig::new(Family::Bipartite, 9).samples(40).seed(3),
        SweepConfig::new(Family::AllConnected, 5).samples(200).seed(4),
    ];
    let mut violating: BTreeMap<String, u64> = BTreeMap::new();
    let mut checked = 0u64;
    for cfg in configs {
        let r = run(&cfg.claims(theorems.clone()))?;
        for t in &r.tallies {
            ensure(t.equality_holds + t.bound_holds + t.strict + t.violation + t.not_applicable == t.instances, || {
                format!("{} tallies do not sum", t.claim_id)
            })?;
            checked += t.instances - t.not_applicable;
            if t.violation > 0 {
                *violating.entry(t.claim_id.clone()).or_default() += t.violation;
            }
        }
        for v in &r.violations {
            ensure(v.lhs.is_some() && (v.witness.is_some() || (v.lower.is_some() && v.upper.is_some())), || {
                format!("{} violation lacks evidence", v.claim_id)
            })?;
        }
    }
    let must_hold = ["thm-2.5", "thm-2.10", "thm-2.14", "thm-3.3", "thm-3.8", "thm-3.9", "thm-3.12", "thm-3.13"];
    for id in must_hold {
        ensure(!violating.contains_key(id), || format!("{id} violated"))?;
    }
    let docs = documented();
    for id in violating.keys() {
        let rows: Vec<_> = docs.iter().filter(|(c, _)| c == id).collect();
        ensure(!rows.is_empty(), || format!("{id} violations are not in FINDINGS.md"))?;
        for (_, inst) in rows {
            let graphs: Vec<Graph> = inst.iter().map(|s| parse_graph6(s)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
            let r = check_claim(id, &graphs).map_err(|e| e.to_string())?;
            ensure(r.status == Status::Violation, || format!("documented {id} on {inst:?} is {}", r.status))?;
        }
    }
    let listed: Vec<String> = violating.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    Ok(format!("{checked} applicable instances; documented violations {}", listed.join(" ")))
}

fn determinism() -> Outcome {
    let cfg = SweepConfig::new(Family::Girth5, 9).samples(25).seed(99);
    let json = |threads: usize| -> Result<String, String> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| e.to_string())?;
        let r = pool.install(|| run(&cfg))?;
        serde_json::to_string(&r).map_err(|e| e.to_string())
    };
    let (a, b, c) = (json(1)?, json(1)?, json(4)?);
    ensure(a == b && a == c, || "sweep reports differ between runs".into())?;

    let mut rng = rng_for(2024);
    for i in 0..1000u64 {
        let n = rng.random_range(1..=62usize);
        let g = match i % 3 {
            0 => random_tree(n, i),
            1 => random_connected(n, rng.random_range(0.0..0.5), i).map_err(|e| e.to_string())?,
            _ => {
                let a = rng.random_range(1..=n.max(2) - 1);
                random_bipartite(a, n.max(2) - a, 0.3, i).map_err(|e| e.to_string())?
            }
        };
        let s = write_graph6(&g).map_err(|e| e.to_string())?;
        let back = parse_graph6(&s).map_err(|e| e.to_string())?;
        ensure(back == g && write_graph6(&back).map_err(|e| e.to_string())? == s, || format!("round trip failed on {s}"))?;
    }
    Ok(format!("{} byte report identical across 3 runs; 1000 graph6 round trips", a.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 structural identities, exhaustive n <= 6", structural),
        ("2 conditional equalities, exhaustive n <= 6", conditional_equalities),
        ("3 eccentricity sandwiches, exhaustive n <= 6", sandwiches),
        ("4 spot values against the Floyd oracle", spot_values),
        ("5 counterexample search", counterexample),
        ("6 theorem audit sweeps", theorem_audit),
        ("7 determinism and graph6 round trip", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
