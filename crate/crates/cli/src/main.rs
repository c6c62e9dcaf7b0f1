//! `leapx`: leap eccentric connectivity indices, graph constructions and
//! claim audits from the command line.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::InputFormat;

#[derive(Debug, Parser)]
#[command(name = "leapx", version, about = "Leap eccentric connectivity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphOutput {
    Json,
    Graph6,
    Edgelist,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree, eccentricity and leap indices of every input graph.
    Indices {
        /// Input files; `-` reads standard input.
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Line graph or one of the subdivision-derived graphs S, Q, R, T.
    Construct {
        #[arg(long)]
        op: String,
        /// `g6:<string>`, `name:<graph>` or a file path.
        graph: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "json")]
        output: GraphOutput,
        /// Also write the vertex provenance as JSON to this path.
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Subdivision vertex, edge or vertex-edge join.
    Join {
        #[arg(long)]
        kind: String,
        g: String,
        h1: String,
        /// Second graph, required for `vertex-edge`.
        h2: Option<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "json")]
        output: GraphOutput,
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Double corona over S, Q, R or T.
    Corona {
        #[arg(long)]
        kind: String,
        g: String,
        h1: String,
        h2: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "json")]
        output: GraphOutput,
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Sweep claims over a graph family and report every violation.
    Verify {
        /// Comma-separated claim ids; all claims when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// all-connected, trees, nonstar-trees, bipartite, girth5, connected,
        /// stars, or custom (with --custom).
        #[arg(long, default_value = "all-connected")]
        family: String,
        /// graph6 file supplying the custom family.
        #[arg(long)]
        custom: Option<String>,
        /// Named graphs for the H slots, e.g. `K1,K2,P3,C4,K3`.
        #[arg(long)]
        h_family: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Smallest graph refuting a registered property.
    Counterexample {
        #[arg(long)]
        property: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Restrict the search, e.g. `bipartite`.
        #[arg(long)]
        only: Option<String>,
    },
    /// List the claim registry.
    Claims {
        #[arg(long, value_enum, default_value = "human")]
        output: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
