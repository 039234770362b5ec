//! `hypodom`: per-graph analysis, family generation, claim verification and
//! open-problem search over graph6 or edge-list streams.
//!
//! Output is JSON lines, one object per input graph or report, emitted in
//! input order regardless of `--jobs`. Exit status is 0 on success, 1 when a
//! verified claim has failures and 2 on usage or input-format errors.

mod analyze;
mod gen;
mod input;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypodom::harness::{self, ClaimId, ClaimParams, ProblemId, SearchLimits};
use hypodom::io::write_graph6;

#[derive(Parser)]
#[command(name = "hypodom", version, about = "Exact domination analysis of hypo-ED and hypo-UD graphs")]
struct Cli {
    /// Worker threads; output order does not depend on this.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Edgelist,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; standard input when omitted or `-`.
    file: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// One JSON record per input graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,

        /// List up to this many γ-sets per graph (0 omits the listing).
        #[arg(long, default_value_t = 0)]
        cap_gamma_sets: usize,

        /// Bondage search limit: a number, `auto` (δ + 2), `none` or `unbounded`.
        #[arg(long, default_value = "auto")]
        bondage_cap: String,
    },
    /// Print graph6 lines for a named family.
    Gen(gen::GenArgs),
    /// Check claims (or `all`) and print one report per claim.
    Verify {
        #[arg(required = true)]
        claims: Vec<String>,

        /// Largest order of the exhaustive stream or family instances.
        #[arg(long)]
        max_n: Option<usize>,

        /// Largest connection parameter for circulant families.
        #[arg(long)]
        k_max: Option<usize>,

        /// Graphs to use instead of the built-in exhaustive stream.
        #[arg(long)]
        stream: Option<PathBuf>,

        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
    /// Search a stream for witnesses to an open problem.
    Search {
        problem: String,

        #[command(flatten)]
        input: InputArgs,

        /// Use the built-in exhaustive stream instead of reading input.
        #[arg(long)]
        builtin: bool,

        /// Largest order of the built-in stream.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Print the derived exception catalog as graph6 lines.
    Catalog,
    /// Print every graph of the given orders, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,

        /// Smallest order; defaults to `n`.
        #[arg(long)]
        min_n: Option<usize>,

        #[arg(long, value_enum, default_value_t = Kind::All)]
        kind: Kind,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    All,
    Connected,
    Trees,
    Unicyclic,
}

pub enum Failure {
    Usage(String),
    ClaimsFailed,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build_global()
    {
        eprintln!("hypodom: {e}");
        return ExitCode::from(2);
    }
    let sink: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("hypodom: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::ClaimsFailed), Ok(())) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("hypodom: {msg}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("hypodom: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Analyze {
            input,
            cap_gamma_sets,
            bondage_cap,
        } => {
            let bondage = analyze::parse_bondage_cap(&bondage_cap)?;
            let text = input::read(input.file.as_deref())?;
            analyze::run(&text, input.format, cap_gamma_sets, bondage, out)
        }
        Command::Gen(args) => {
            for g in gen::generate(&args)? {
                writeln!(out, "{}", write_graph6(&g))?;
            }
            Ok(())
        }
        Command::Verify {
            claims,
            max_n,
            k_max,
            stream,
            format,
        } => {
            let ids = parse_claims(&claims)?;
            let mut params = ClaimParams {
                max_n,
                k_max,
                ..Default::default()
            };
            if let Some(path) = stream {
                let text = input::read(Some(&path))?;
                params.stream = Some(input::parse_all(&text, format)?);
            }
            let mut failed = false;
            for id in ids {
                let report = harness::verify_claim(id, &params)?;
                failed |= !report.passed();
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            }
            if failed {
                Err(Failure::ClaimsFailed)
            } else {
                Ok(())
            }
        }
        Command::Search {
            problem,
            input,
            builtin,
            max_n,
        } => {
            let problem: ProblemId = problem.parse()?;
            let limits = SearchLimits { max_n };
            let report = if builtin {
                harness::search_open_problems(problem, None, &limits)?
            } else {
                let text = input::read(input.file.as_deref())?;
                let graphs = input::parse_all(&text, input.format)?;
                harness::search_open_problems(problem, Some(&graphs), &limits)?
            };
            for w in &report.matches {
                writeln!(out, "{}", serde_json::to_string(w)?)?;
            }
            for row in &report.table {
                writeln!(out, "{}", serde_json::to_string(row)?)?;
            }
            eprintln!(
                "{}: {} graphs checked, {} matches",
                report.problem,
                report.n_checked,
                report.matches.len()
            );
            Ok(())
        }
        Command::Catalog => {
            let catalog = harness::derive_exception_catalog()?;
            for g in &catalog.graphs {
                writeln!(out, "{}", write_graph6(g))?;
            }
            Ok(())
        }
        Command::Enumerate { n, min_n, kind } => {
            let min_n = min_n.unwrap_or(n);
            for order in min_n..=n {
                let graphs = match kind {
                    Kind::All => hypodom::enumerate::graphs_of_order(order)?,
                    Kind::Connected => hypodom::enumerate::connected_graphs_of_order(order)?,
                    Kind::Trees => hypodom::enumerate::trees_of_order(order)?,
                    Kind::Unicyclic => hypodom::enumerate::unicyclic_graphs_of_order(order)?,
                };
                for g in &graphs {
                    writeln!(out, "{}", write_graph6(g))?;
                }
            }
            Ok(())
        }
    }
}

fn parse_claims(names: &[String]) -> Result<Vec<ClaimId>, Failure> {
    if names.iter().any(|n| n.eq_ignore_ascii_case("all")) {
        return Ok(ClaimId::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| n.parse::<ClaimId>().map_err(Failure::from))
        .collect()
}
