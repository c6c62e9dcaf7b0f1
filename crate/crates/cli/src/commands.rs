//! Subcommand implementations. Every report is rendered once, after all work
//! is done, so output is identical across runs with the same arguments.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use leapx::format::parse_graph6_lines;
use leapx::generate::EXHAUSTIVE_CAP;
use leapx::verify::{default_h_family, find_counterexample_in, registry, Restriction};
use leapx::{
    derive, double_corona, index_report, sd_edge_join, sd_vertex_edge_join, sd_vertex_join, sweep, write_edge_list,
    write_graph6, DerivedKind, Family, Graph, IndexReport, JoinKind, SweepConfig, SweepReport,
};
use serde::Serialize;

use super::input::{named_list, read_graphs, read_one, InputFormat};
use super::{Command, GraphOutput, OutputFormat};

const VIOLATION_EXIT: u8 = 2;

/// Writes to stdout; a closed pipe downstream is not an error.
fn emit(text: &str) -> Result<()> {
    let mut stdout = io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e).context("writing standard output"),
        _ => Ok(()),
    }
}

macro_rules! out {
    ($($arg:tt)*) => { emit(&format!($($arg)*))? };
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(&(format!($($arg)*) + "\n"))? };
}

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Indices { inputs, format, output } => indices(&inputs, format, output),
        Command::Construct { op, graph, format, output, sidecar } => {
            let kind: DerivedKind = op.parse()?;
            let g = read_one(&graph, format)?;
            let d = derive(kind, &g);
            let built = BuiltGraph::new("construct", kind.to_string(), vec![write_graph6(&g)?], &d.graph, &d.provenance)?;
            emit_graph(&built, &d.graph, output, sidecar.as_deref())
        }
        Command::Join { kind, g, h1, h2, format, output, sidecar } => {
            let kind: JoinKind = kind.parse()?;
            let g = read_one(&g, format)?;
            let h1 = read_one(&h1, format)?;
            let j = match (kind, h2) {
                (JoinKind::Vertex, None) => sd_vertex_join(&g, &h1)?,
                (JoinKind::Edge, None) => sd_edge_join(&g, &h1)?,
                (JoinKind::VertexEdge, Some(h2)) => sd_vertex_edge_join(&g, &h1, &read_one(&h2, format)?)?,
                (JoinKind::VertexEdge, None) => bail!("vertex-edge join needs two H graphs"),
                (_, Some(_)) => bail!("{kind} join takes a single H graph"),
            };
            let inputs = instance_strings(&[&g, &h1])?;
            let built = BuiltGraph::new("join", kind.to_string(), inputs, &j.graph, &j.provenance)?;
            emit_graph(&built, &j.graph, output, sidecar.as_deref())
        }
        Command::Corona { kind, g, h1, h2, format, output, sidecar } => {
            let kind: DerivedKind = kind.parse()?;
            let (g, h1, h2) = (read_one(&g, format)?, read_one(&h1, format)?, read_one(&h2, format)?);
            let c = double_corona(kind, &g, &h1, &h2)?;
            let inputs = instance_strings(&[&g, &h1, &h2])?;
            let built = BuiltGraph::new("corona", kind.to_string(), inputs, &c.graph, &c.provenance)?;
            emit_graph(&built, &c.graph, output, sidecar.as_deref())
        }
        Command::Verify { claims, family, custom, h_family, max_n, samples, seed, output } => {
            let family = match (family.as_str(), custom) {
                ("custom", Some(path)) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {path}"))?;
                    Family::Custom(parse_graph6_lines(&text).with_context(|| format!("parsing {path}"))?)
                }
                ("custom", None) => bail!("--family custom needs --custom <graph6 file>"),
                (_, Some(_)) => bail!("--custom is only valid with --family custom"),
                (name, None) => name.parse()?,
            };
            let randomized = matches!(
                family,
                Family::Trees | Family::NonstarTrees | Family::Bipartite | Family::Girth5 | Family::Connected
            ) || (family == Family::AllConnected && samples.is_some());
            if randomized && seed.is_none() {
                bail!("--seed is required for the {family} family");
            }
            let mut cfg = SweepConfig::new(family, max_n);
            cfg.claims = claims;
            cfg.samples = samples;
            cfg.seed = seed.unwrap_or(0);
            cfg.cap = exhaustive_cap()?;
            cfg.h_family = match h_family {
                Some(list) => named_list(&list)?,
                None => default_h_family(),
            };
            let report = sweep(&cfg)?;
            out!("{}", render_sweep(&report, output)?);
            Ok(if report.total_violations() > 0 { ExitCode::from(VIOLATION_EXIT) } else { ExitCode::SUCCESS })
        }
        Command::Counterexample { property, max_n, only } => {
            let restriction = match only.as_deref() {
                None => None,
                Some("bipartite") => Some(Restriction::Bipartite),
                Some(other) => bail!("unknown restriction `{other}`"),
            };
            if max_n > exhaustive_cap()? {
                bail!("--max-n {max_n} exceeds the exhaustive cap {}", exhaustive_cap()?);
            }
            let found = find_counterexample_in(&property, max_n, restriction)?;
            let report = CounterexampleReport {
                property: &property,
                max_n,
                restriction: only.as_deref(),
                found: found.is_some(),
                counterexample: found.as_ref(),
            };
            outln!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Claims { output } => {
            let infos: Vec<_> = registry().iter().map(|c| c.info()).collect();
            match output {
                OutputFormat::Json => outln!("{}", serde_json::to_string_pretty(&infos)?),
                OutputFormat::Csv => {
                    outln!("id,kind,arity,summary");
                    for c in &infos {
                        outln!("{},{:?},{},{}", c.id, c.kind, c.arity, csv_field(c.summary));
                    }
                }
                OutputFormat::Human => {
                    for c in &infos {
                        outln!("{:<18} {:<11} arity {}  {}", c.id, format!("{:?}", c.kind), c.arity, c.summary);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The exhaustive cap, lowered (never raised) by `LEAPX_MAX_N`.
fn exhaustive_cap() -> Result<usize> {
    match std::env::var("LEAPX_MAX_N") {
        Ok(v) => {
            let n: usize = v.trim().parse().map_err(|_| anyhow!("LEAPX_MAX_N must be an integer, got `{v}`"))?;
            Ok(n.min(EXHAUSTIVE_CAP))
        }
        Err(_) => Ok(EXHAUSTIVE_CAP),
    }
}

fn instance_strings(graphs: &[&Graph]) -> Result<Vec<String>> {
    Ok(graphs.iter().map(|g| write_graph6(g)).collect::<leapx::Result<_>>()?)
}

#[derive(Serialize)]
struct IndicesRow<'a> {
    source: &'a str,
    graph6: String,
    #[serde(flatten)]
    report: IndexReport,
}

fn indices(inputs: &[String], format: InputFormat, output: OutputFormat) -> Result<ExitCode> {
    let graphs = read_graphs(inputs, format)?;
    let rows = graphs
        .iter()
        .map(|s| {
            let report = index_report(&s.graph).with_context(|| s.source.clone())?;
            Ok(IndicesRow { source: &s.source, graph6: write_graph6(&s.graph)?, report })
        })
        .collect::<Result<Vec<_>>>()?;
    match output {
        OutputFormat::Json => outln!("{}", serde_json::to_string_pretty(&rows)?),
        OutputFormat::Csv => {
            outln!("source,graph6,n,m,M1,LM1,theta,xiC,LxiC,sum_d2");
            for r in &rows {
                let x = &r.report;
                outln!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    csv_field(r.source),
                    csv_field(&r.graph6),
                    x.n,
                    x.m,
                    x.m1,
                    x.lm1,
                    x.theta,
                    x.xi_c,
                    x.lxi_c,
                    x.sum_d2
                );
            }
        }
        OutputFormat::Human => {
            for r in &rows {
                let x = &r.report;
                outln!(
                    "{} ({}): n={} m={} M1={} LM1={} theta={} xiC={} LxiC={}",
                    r.source, r.graph6, x.n, x.m, x.m1, x.lm1, x.theta, x.xi_c, x.lxi_c
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
struct BuiltGraph<P: Serialize> {
    operation: &'static str,
    kind: String,
    inputs: Vec<String>,
    graph6: String,
    n: usize,
    m: usize,
    indices: IndexReport,
    provenance: P,
}

impl<P: Serialize> BuiltGraph<P> {
    fn new(operation: &'static str, kind: String, inputs: Vec<String>, g: &Graph, provenance: P) -> Result<Self> {
        Ok(BuiltGraph {
            operation,
            kind,
            inputs,
            graph6: write_graph6(g)?,
            n: g.n(),
            m: g.m(),
            indices: index_report(g)?,
            provenance,
        })
    }
}

#[derive(Serialize)]
struct Sidecar<'a, P: Serialize> {
    operation: &'static str,
    kind: &'a str,
    graph6: &'a str,
    provenance: &'a P,
}

fn emit_graph<P: Serialize>(built: &BuiltGraph<P>, g: &Graph, output: GraphOutput, sidecar: Option<&str>) -> Result<ExitCode> {
    if let Some(path) = sidecar {
        let side = Sidecar { operation: built.operation, kind: &built.kind, graph6: &built.graph6, provenance: &built.provenance };
        fs::write(path, serde_json::to_string_pretty(&side)? + "\n").with_context(|| format!("writing {path}"))?;
    }
    match output {
        GraphOutput::Json => outln!("{}", serde_json::to_string_pretty(built)?),
        GraphOutput::Graph6 => outln!("{}", built.graph6),
        GraphOutput::Edgelist => out!("{}", write_edge_list(g)),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CounterexampleReport<'a> {
    property: &'a str,
    max_n: usize,
    restriction: Option<&'a str>,
    found: bool,
    counterexample: Option<&'a leapx::Counterexample>,
}

fn render_sweep(report: &SweepReport, output: OutputFormat) -> Result<String> {
    let mut out = String::new();
    match output {
        OutputFormat::Json => {
            out = serde_json::to_string_pretty(report)?;
            out.push('\n');
        }
        OutputFormat::Csv => {
            out.push_str("claim_id,instances,equality_holds,bound_holds,strict,violation,not_applicable\n");
            for t in &report.tallies {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    t.claim_id, t.instances, t.equality_holds, t.bound_holds, t.strict, t.violation, t.not_applicable
                )?;
            }
        }
        OutputFormat::Human => {
            writeln!(
                out,
                "family {} max_n {} seed {} base graphs {} h {}",
                report.family,
                report.max_n,
                report.seed,
                report.base_graphs,
                report.h_family.join(",")
            )?;
            writeln!(out, "{:<18} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}", "claim", "inst", "equal", "bound", "strict", "VIOL", "n/a")?;
            for t in &report.tallies {
                writeln!(
                    out,
                    "{:<18} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
                    t.claim_id, t.instances, t.equality_holds, t.bound_holds, t.strict, t.violation, t.not_applicable
                )?;
            }
            for v in &report.violations {
                let fmt = |b: Option<i64>| b.map_or("-".to_string(), |x| x.to_string());
                writeln!(
                    out,
                    "VIOLATION {} [{}] lhs={} lower={} upper={}{}",
                    v.claim_id,
                    v.instance.join(" "),
                    fmt(v.lhs),
                    fmt(v.lower),
                    fmt(v.upper),
                    v.witness.as_ref().map_or(String::new(), |w| format!(" at {} {}={}", w.location, w.quantity, w.actual))
                )?;
            }
        }
    }
    Ok(out)
}
