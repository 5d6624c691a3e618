//! Command-line front end.
//!
//! [`run`] parses arguments and writes to the given streams, so the whole
//! CLI can be driven in-process. Every number printed comes from a library
//! call; this module only reads files and formats results.

mod commands;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::generation::GenerationError;
use crate::knowledge::KnowledgeError;
use crate::relevance::emotion::DEFAULT_SEED;
use crate::relevance::RelevanceError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus {
    pub code: i32,
}

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus { code: 0 };
    pub const INPUT: ExitStatus = ExitStatus { code: 1 };
    pub const EVALUATION: ExitStatus = ExitStatus { code: 2 };
    pub const INCONSISTENT: ExitStatus = ExitStatus { code: 3 };
}

#[derive(Debug, Parser)]
#[command(name = "simplicity", version, about = "Score situations by unexpectedness")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the combiner monotonicity check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank a frequency CSV (item,count) and store it in a kb file.
    Ingest {
        csv: PathBuf,
        #[arg(long)]
        name: String,
        #[arg(long)]
        kb: PathBuf,
    },
    /// Positional code utilities.
    Codec {
        #[command(subcommand)]
        op: CodecOp,
    },
    /// Individual complexity terms.
    Complexity {
        #[command(subcommand)]
        term: ComplexityTerm,
    },
    /// Score one situation descriptor (`-` reads stdin).
    Score {
        situation: PathBuf,
        #[command(flatten)]
        scoring: ScoringArgs,
    },
    /// Rank records by unexpectedness.
    Rank {
        records: PathBuf,
        #[command(flatten)]
        scoring: ScoringArgs,
    },
    /// Unexpectedness of two independent situations occurring together.
    Coincidence {
        #[arg(long, allow_negative_numbers = true)]
        cw1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c1: f64,
        #[arg(long, allow_negative_numbers = true)]
        cw2: f64,
        /// Description of the second situation given the first.
        #[arg(long = "c2-given-1", allow_negative_numbers = true)]
        c2_given_1: f64,
        /// Time between the two events; adds the linkage cost to the second description.
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        granularity: f64,
    },
    /// Does adding a kb delta make a situation less unexpected?
    Argue {
        delta: PathBuf,
        situation: PathBuf,
        #[command(flatten)]
        scoring: ScoringArgs,
    },
    /// Check a kb for bound inconsistencies and mutability conflicts.
    KbLint {
        #[arg(long)]
        kb: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum CodecOp {
    Encode {
        rank: u64,
    },
    /// Decode a bit string; pass "" for the empty word.
    Decode {
        bits: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComplexityTerm {
    /// Description complexity of an item from its rank.
    Item {
        item: String,
        #[arg(long)]
        kb: PathBuf,
        #[arg(long)]
        list: String,
        #[arg(long)]
        fallback_rank: bool,
    },
    Lottery {
        n: u64,
        #[arg(default_value_t = 1)]
        draws: u64,
    },
    /// Locating an event `t` ago at granularity `a`.
    Temporal {
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
    },
    /// Placing an event among `n` locations.
    Place { n: u64 },
    /// Indeterminacy among `k` witnesses.
    Witness { k: u64 },
    Distance {
        d: f64,
        #[arg(long, default_value_t = 1.0)]
        d0: f64,
    },
}

#[derive(Debug, Args)]
pub struct ScoringArgs {
    #[arg(long)]
    pub kb: Option<PathBuf>,
    /// `additive` or `weighted:<w>`.
    #[arg(long)]
    pub emotion_combiner: Option<String>,
    /// Reference distance for the distance penalty.
    #[arg(long, default_value_t = 1.0)]
    pub d0: f64,
    /// Treat unknown ranked items as one past the end of their list.
    #[arg(long)]
    pub fallback_rank: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Knowledge(#[from] KnowledgeError),
    #[error(transparent)]
    Relevance(#[from] RelevanceError),
    #[error("{0}")]
    Input(String),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl From<GenerationError> for CliError {
    fn from(e: GenerationError) -> Self {
        CliError::Relevance(e.into())
    }
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Knowledge(e) => knowledge_status(e),
            CliError::Relevance(e) => match e {
                RelevanceError::Knowledge(e) => knowledge_status(e),
                RelevanceError::Generation(GenerationError::InconsistentBounds(_)) => ExitStatus::INCONSISTENT,
                RelevanceError::Generation(GenerationError::UnresolvedScenario(_)) | RelevanceError::Undefined => {
                    ExitStatus::EVALUATION
                }
                _ => ExitStatus::INPUT,
            },
            CliError::Input(_) | CliError::Output(_) => ExitStatus::INPUT,
        }
    }
}

fn knowledge_status(e: &KnowledgeError) -> ExitStatus {
    match e {
        KnowledgeError::ContradictoryFact(_) | KnowledgeError::InvalidBounds { .. } => ExitStatus::INCONSISTENT,
        _ => ExitStatus::INPUT,
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                ExitStatus::INPUT
            } else {
                ExitStatus::SUCCESS
            };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return status;
        }
    };
    match commands::dispatch(&cli, stdin, out) {
        Ok(()) => ExitStatus::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.status()
        }
    }
}
