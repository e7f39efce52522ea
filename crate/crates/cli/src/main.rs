mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use bei_core::io::{write_graph, Format};
use bei_core::products;
use bei_core::spectrum::{Spectrum, DEFAULT_MAX_N};
use bei_core::verify::{self, Mutation, VerifyConfig};
use bei_core::{Error, Graph};
use clap::{Parser, Subcommand};

const EXIT_USAGE: u8 = 1;
const EXIT_BOUND: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Minimal primes, dimension, unmixed and Cohen-Macaulay verdicts for
/// binomial edge ideals of graphs.
#[derive(Parser)]
#[command(name = "bei", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report classification, minimal primes, height, dimension, depth and
    /// the unmixed and CM verdicts of a graph.
    Analyze {
        /// Graph file, or `-` for stdin.
        file: String,
        #[arg(long)]
        json: bool,
        /// Input format; guessed when omitted.
        #[arg(long)]
        format: Option<Format>,
        /// Largest n for the subset enumeration.
        #[arg(long, env = "BEI_MAX_N", default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Omit the list of minimal primes when there are more than this many.
        #[arg(long)]
        elide_primes_above: Option<usize>,
    },
    /// Build a graph and print it. Families: complete N, path N, cycle N,
    /// edgeless N, multipartite N1 .. NT, fan R T, join A B, cone A,
    /// corona A B, whisker A, complement A, union A B ..
    ///
    /// Graph arguments are tokens such as K4, P5, C6, E3, K2,3 or K2+P3,
    /// or paths to graph files.
    Construct {
        family: String,
        params: Vec<String>,
        /// Output format.
        #[arg(long, default_value = "edgelist")]
        format: Format,
    },
    /// Cross-check closed forms against brute force on seeded random
    /// instances.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Instances per family.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 11)]
        max_n: usize,
        #[arg(long, hide = true)]
        mutate: Option<Mutation>,
    },
    /// Decide whether J(K_m, G) is unmixed for a connected graph G.
    PairUnmixed {
        m: usize,
        file: String,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long, env = "BEI_MAX_N", default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
    kind: &'static str,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::SizeBound { .. } | Error::TooManyVertices { .. } => (EXIT_BOUND, "size_bound"),
            Error::Parse { .. } | Error::Graph6(_) => (EXIT_USAGE, "parse"),
            _ => (EXIT_USAGE, "invalid_input"),
        };
        Failure { code, message: e.to_string(), kind }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into(), kind: "usage" }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let json = matches!(cli.command, Command::Analyze { json: true, .. });
    let mut out = String::new();
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(f) => {
            if json {
                let err = serde_json::json!({ "error": { "kind": f.kind, "message": f.message } });
                out = format!("{err}\n");
            } else {
                eprintln!("bei: {}", f.message);
            }
            f.code
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code)
}

fn run(command: Command, out: &mut String) -> Result<u8, Failure> {
    match command {
        Command::Analyze { file, json, format, max_n, elide_primes_above } => {
            let g = input::read_graph(&file, format)?;
            let report = report::analyze(&g, max_n, elide_primes_above)?;
            if json {
                *out = serde_json::to_string(&report).expect("serializable") + "\n";
            } else {
                *out = report.to_string();
            }
            Ok(0)
        }
        Command::Construct { family, params, format } => {
            let g = construct(&family, &params)?;
            *out = write_graph(&g, format)?;
            Ok(0)
        }
        Command::Verify { seed, count, max_n, mutate } => {
            let report = verify::run(&VerifyConfig { seed, count, max_n, mutation: mutate })?;
            *out = report.to_string();
            Ok(if report.passed() { 0 } else { EXIT_VERIFY })
        }
        Command::PairUnmixed { m, file, format, max_n } => {
            let g = input::read_graph(&file, format)?;
            let verdict = Spectrum::new(&g, max_n)?.pair_unmixed(m)?;
            *out = format!("{verdict}\n");
            Ok(0)
        }
    }
}

fn numbers(params: &[String]) -> Result<Vec<usize>, Failure> {
    params.iter().map(|p| p.parse().map_err(|_| usage(format!("expected a number, got {p:?}")))).collect()
}

fn arity<T>(family: &str, params: &[T], n: usize) -> Result<(), Failure> {
    if params.len() != n {
        return Err(usage(format!("{family} takes {n} parameter(s), got {}", params.len())));
    }
    Ok(())
}

fn construct(family: &str, params: &[String]) -> Result<Graph, Failure> {
    let graphs = || params.iter().map(|p| input::parse_token(p, None)).collect::<Result<Vec<_>, _>>();
    let g = match family {
        "complete" | "path" | "cycle" | "edgeless" => {
            let ns = numbers(params)?;
            arity(family, &ns, 1)?;
            match family {
                "complete" => Graph::complete(ns[0])?,
                "path" => Graph::path(ns[0])?,
                "cycle" => Graph::cycle(ns[0])?,
                _ => Graph::edgeless(ns[0])?,
            }
        }
        "multipartite" => {
            let ns = numbers(params)?;
            if ns.is_empty() {
                return Err(usage("multipartite needs at least one part size"));
            }
            Graph::complete_multipartite(&ns)?
        }
        "fan" => {
            let ns = numbers(params)?;
            arity(family, &ns, 2)?;
            products::fan(ns[0], ns[1])?
        }
        "join" | "corona" => {
            let gs = graphs()?;
            arity(family, &gs, 2)?;
            if family == "join" {
                products::join(&gs[0], &gs[1])?
            } else {
                products::corona(&gs[0], &gs[1])?
            }
        }
        "cone" | "whisker" | "complement" => {
            let gs = graphs()?;
            arity(family, &gs, 1)?;
            match family {
                "cone" => products::cone(&gs[0])?,
                "whisker" => products::whisker(&gs[0])?,
                _ => gs[0].complement(),
            }
        }
        "union" => {
            let gs = graphs()?;
            if gs.is_empty() {
                return Err(usage("union needs at least one graph"));
            }
            Graph::disjoint_union(&gs)?
        }
        other => return Err(usage(format!("unknown family {other:?}"))),
    };
    Ok(g)
}
