//! `zagreb`: degree-based indices, Zagreb lower bounds and exhaustive checks.

mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zagreb_core::bounds::parse_alpha;

use commands::{CorpusFlags, InputFormat, Selection};
use error::{exit, CliError};
use output::OutputFormat;

#[derive(Debug, Parser)]
#[command(name = "zagreb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct InputArgs {
    /// Graph file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    format: InputFormat,
}

#[derive(Debug, clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    out: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index values of one graph.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// Exponent for an extra general Zagreb row; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Lower bounds of one graph against its true values.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        /// Comma-separated bound ids, `all-pairs` or `best`. Defaults to every id.
        #[arg(long)]
        bounds: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive property checks over a graph corpus.
    Verify {
        #[command(flatten)]
        corpus: CorpusFlags,
        /// Properties such as `P1,P3` or `dominance`. Defaults to all.
        #[arg(long)]
        properties: Vec<String>,
        #[arg(value_name = "PROPERTY")]
        positional: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recompute the reference table for the three example graphs.
    ReproduceTable1 {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// One graph6 line per corpus graph.
    Enumerate {
        #[command(flatten)]
        corpus: CorpusFlags,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let (doc, code, path) = match cli.command {
        Command::Compute {
            input,
            alpha,
            output,
        } => {
            let alphas = alpha
                .iter()
                .map(|a| parse_alpha(a))
                .collect::<Result<Vec<_>, _>>()?;
            let g = commands::read_graph(&input.input, input.format)?;
            (
                commands::compute(&g, &alphas, output.out)?,
                exit::OK,
                output.output,
            )
        }
        Command::Bounds {
            input,
            alpha,
            bounds,
            output,
        } => {
            let alpha = parse_alpha(&alpha)?;
            let selection = match bounds {
                Some(s) => Selection::parse(&s)?,
                None => Selection::Ids(zagreb_core::bounds::BoundId::ALL.to_vec()),
            };
            let g = commands::read_graph(&input.input, input.format)?;
            let doc = commands::bounds(&g, alpha, &selection, output.out)?;
            (doc, exit::OK, output.output)
        }
        Command::Verify {
            corpus,
            mut properties,
            positional,
            output,
        } => {
            properties.extend(positional);
            let props = commands::parse_properties(&properties)?;
            let limit = commands::order_limit()?;
            let (doc, code) = commands::verify(&corpus, &props, output.out, limit)?;
            (doc, code, output.output)
        }
        Command::ReproduceTable1 { output } => {
            let (doc, code) = commands::reproduce(output.out);
            (doc, code, output.output)
        }
        Command::Enumerate { corpus, output } => {
            let limit = commands::order_limit()?;
            commands::enumerate(&corpus, output.as_ref(), limit)?;
            return Ok(exit::OK);
        }
    };
    doc.write_to(path.as_deref())?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
