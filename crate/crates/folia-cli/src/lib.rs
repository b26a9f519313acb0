//! Command-line front end for the foliation-graph toolkit.
//!
//! The binary (`folia`) wires four subcommands over the library crates:
//!
//! - `ingest`: build a foliation graph from a triangulated surface with a
//!   scalar field (OFF mesh plus one-value-per-line field file).
//! - `classify`: run one of the decision procedures on a stored graph and
//!   report its verdict through the exit code.
//! - `simplify`: apply surgery rewrites until a fixed point and write the
//!   result plus a replayable move trace.
//! - `export-dot`: render a graph for Graphviz.
//!
//! Graphs travel in a line-oriented text container (`.fgr`, format tag
//! `folia/1`) defined in [`format`]. The schema is strict: unknown sections,
//! fields, or option keys are rejected with a line/column diagnostic rather
//! than skipped, so a file that parses is exactly what it says it is.
//!
//! Everything observable about a command — exit code, stdout, stderr — is
//! captured in [`commands::Outcome`], which keeps the process boundary
//! trivial and the behaviour testable in-process.

pub mod commands;
pub mod dot;
pub mod format;
pub mod trace;

use thiserror::Error;

/// Errors shared by the file formats and the command layer.
#[derive(Debug, Error)]
pub enum CliError {
    /// Underlying file I/O failure.
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    /// Syntax or schema violation in a graph container file.
    #[error("{file}:{line}:{column}: {message}")]
    Parse {
        file: String,
        line: usize,
        column: usize,
        message: String,
    },
    /// Mesh ingestion or embedded-mesh failure.
    #[error(transparent)]
    Ingest(#[from] folia_ingest::IngestError),
}

impl CliError {
    fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

pub use commands::{cmd_classify, cmd_export_dot, cmd_ingest, cmd_simplify, Outcome};
pub use format::{
    parse_graph_file, read_graph_file, serialize_graph_file, write_graph_file, GraphFile,
};
