//! `folia`: foliation graphs from meshes — build, check, rewrite, render.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use folia_cli::commands;

#[derive(Parser)]
#[command(
    name = "folia",
    version,
    about = "Decorated leaf-space graphs of singular foliations: \
             ingest meshes, run theorem checkers, apply surgery, export DOT"
)]
struct Cli {
    /// Seed for randomized operations. Every current command is
    /// deterministic; the flag is accepted for interface stability.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a foliation graph from an OFF mesh and a scalar field file
    Ingest {
        /// Triangulated closed surface (ASCII OFF)
        mesh: PathBuf,
        /// Field values, one per vertex per line
        field: PathBuf,
        /// Output graph (.fgr, mesh embedded)
        out: PathBuf,
        /// Perturb the field to split degenerate saddles first
        #[arg(long)]
        split: bool,
    },
    /// Run a decision procedure on a stored graph
    Classify {
        /// Input graph (.fgr)
        graph: PathBuf,
        /// One of: reeb-sphere, center-saddle, leaf-space, transversal,
        /// novikov, haefliger
        #[arg(long)]
        checker: String,
    },
    /// Apply surgery rewrites until no move applies
    Simplify {
        /// Input graph (.fgr)
        graph: PathBuf,
        /// Output graph (.fgr); a .trace sidecar is written next to it
        out: PathBuf,
        /// One of: trivial-couples, saddle-pairs, full
        #[arg(long, default_value = "full")]
        strategy: String,
    },
    /// Render a graph as a Graphviz digraph
    ExportDot {
        /// Input graph (.fgr)
        graph: PathBuf,
        /// Output DOT file
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not usage errors; anything else is.
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let _ = cli.seed;
    let outcome = match cli.command {
        Command::Ingest {
            mesh,
            field,
            out,
            split,
        } => commands::cmd_ingest(&mesh, &field, &out, split),
        Command::Classify { graph, checker } => commands::cmd_classify(&graph, &checker),
        Command::Simplify {
            graph,
            out,
            strategy,
        } => commands::cmd_simplify(&graph, &out, &strategy),
        Command::ExportDot { graph, out } => commands::cmd_export_dot(&graph, &out),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
