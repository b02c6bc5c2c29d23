use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use pmcover::compositions::{k4_composition, three_cut_join, two_cut_join, Composition};
use pmcover::coverings::{
    analyze, covering_number_with, fulkerson_covering_with, odd_covering_number_with, AnalyzeOptions, Covering,
    FulkersonResult, OddResult, SolverOptions, TauResult,
};
use pmcover::generators::named_graph;
use pmcover::graph::to_graph6;
use pmcover::matchings::{enumerate_perfect_matchings_capped, format_matching};
use pmcover::{CubicGraph, Deadline, PmCatalog};
use pmcover_cli::graph_spec::resolve;
use pmcover_cli::scan::{run_scan, ScanOptions};
use pmcover_cli::verify::verify_all;
use pmcover_cli::CliError;
use serde_json::json;

/// `println!` that ignores a closed stdout, as when piped into `head`.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "pmcover", version, about = "Perfect matching coverings of cubic graphs")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Limits {
    /// Abort when the graph has more perfect matchings than this.
    #[arg(long)]
    max_pm: Option<usize>,
    /// Give up after this many seconds.
    #[arg(long)]
    timeout_s: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Every invariant of one graph.
    Analyze {
        /// Graph6 string, generator name such as `flower(5)`, or `@file`.
        graph: String,
        #[arg(long, default_value_t = 6)]
        cap: usize,
        #[arg(long, default_value_t = 7)]
        odd_cap: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// The perfect matching index and a minimum covering.
    Tau {
        graph: String,
        #[arg(long, default_value_t = 6)]
        cap: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// The least odd number of perfect matchings covering each edge an odd
    /// number of times.
    TauOdd {
        graph: String,
        #[arg(long, default_value_t = 7)]
        cap: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Six perfect matchings covering every edge exactly twice.
    Fulkerson {
        graph: String,
        #[command(flatten)]
        limits: Limits,
    },
    /// List every perfect matching, one per line.
    EnumeratePm {
        graph: String,
        #[arg(long)]
        max_pm: Option<usize>,
    },
    /// Build a named graph: petersen, k4, k33, theta, blanusa1, blanusa2,
    /// prism N, flower K, goldberg K, gblanusa TYPE T, perm S0 S1 ..., random N.
    Gen {
        name: String,
        params: Vec<usize>,
        /// Print graph6 only.
        #[arg(long)]
        g6: bool,
        /// Seed for `random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Join graphs: `two-cut G1 E1 G2 E2`, `three-cut G1 V1 G2 V2`, or
    /// `k4 G1 V1 G2 V2 G3 V3 G4 V4`.
    Compose {
        op: ComposeOp,
        /// Alternating graph specs and edge or vertex indices.
        #[arg(num_args = 1..)]
        operands: Vec<String>,
        #[arg(long)]
        g6: bool,
    },
    /// Analyze every graph of a graph6 file into a JSON Lines record file.
    Scan {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, default_value_t = 6)]
        cap: usize,
        #[arg(long, default_value_t = 7)]
        odd_cap: usize,
        #[arg(long, default_value_t = 60)]
        timeout_s: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        max_pm: Option<usize>,
    },
    /// Run the reproduction suite; exits 1 if any check fails.
    VerifyPaper,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComposeOp {
    TwoCut,
    ThreeCut,
    K4,
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn deadline(limits: &Limits) -> Deadline {
    limits
        .timeout_s
        .map_or_else(Deadline::none, |s| Deadline::after(Duration::from_secs(s)))
}

fn catalog(g: &CubicGraph, max_pm: Option<usize>) -> Result<PmCatalog, CliError> {
    enumerate_perfect_matchings_capped(g, max_pm).map_err(usage)
}

fn print_json(value: &impl serde::Serialize) {
    out!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn print_covering(g: &CubicGraph, cov: &Covering) {
    for pm in cov.matchings() {
        out!("  {}", format_matching(g, pm));
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            graph,
            cap,
            odd_cap,
            limits,
        } => {
            let g = resolve(&graph)?;
            let report = analyze(
                &g,
                &AnalyzeOptions {
                    tau_cap: cap,
                    odd_cap,
                    deadline: deadline(&limits),
                    max_pm: limits.max_pm,
                },
            );
            if cli.json {
                print_json(&report);
            } else {
                let value = serde_json::to_value(&report).expect("serializable");
                for (k, v) in value.as_object().expect("object") {
                    out!("{k:>18}: {v}");
                }
            }
        }
        Command::Tau { graph, cap, limits } => {
            let g = resolve(&graph)?;
            let cat = catalog(&g, limits.max_pm)?;
            let opts = SolverOptions {
                deadline: deadline(&limits),
                ..SolverOptions::default()
            };
            let res = covering_number_with(&g, &cat, cap, &opts).map_err(usage)?;
            if cli.json {
                print_json(&res);
                return Ok(());
            }
            match &res {
                TauResult::Found { tau, witness } => {
                    out!("tau = {tau}");
                    print_covering(&g, witness);
                }
                TauResult::Exceeds { cap: c } => out!("tau > {c}"),
                TauResult::Infeasible => out!("some edge lies in no perfect matching"),
                TauResult::TimedOut { above } => out!("timed out; tau > {above}"),
            }
        }
        Command::TauOdd { graph, cap, limits } => {
            let g = resolve(&graph)?;
            let cat = catalog(&g, limits.max_pm)?;
            let opts = SolverOptions {
                deadline: deadline(&limits),
                ..SolverOptions::default()
            };
            let res = odd_covering_number_with(&g, &cat, cap, &opts).map_err(usage)?;
            if cli.json {
                print_json(&res);
                return Ok(());
            }
            match &res {
                OddResult::Found {
                    size,
                    witness,
                    count_minimum,
                    subsets_at_size,
                } => {
                    out!("tau_odd = {size}");
                    if let Some(c) = count_minimum {
                        out!("{c} of {subsets_at_size} subsets of size {size} are odd coverings");
                    }
                    print_covering(&g, witness);
                }
                OddResult::NoneExists => out!("no odd covering exists"),
                OddResult::Exceeds { cap: c } => out!("tau_odd > {c}"),
                OddResult::TimedOut { above } => out!("timed out; tau_odd > {above}"),
            }
        }
        Command::Fulkerson { graph, limits } => {
            let g = resolve(&graph)?;
            let cat = catalog(&g, limits.max_pm)?;
            let opts = SolverOptions {
                deadline: deadline(&limits),
                ..SolverOptions::default()
            };
            let res = fulkerson_covering_with(&g, &cat, &opts).map_err(usage)?;
            if cli.json {
                print_json(&res);
                return Ok(());
            }
            match &res {
                FulkersonResult::Found { witness } => {
                    out!("Fulkerson covering:");
                    print_covering(&g, witness);
                }
                FulkersonResult::NotFound => out!("no Fulkerson covering"),
                FulkersonResult::TimedOut => out!("timed out"),
            }
        }
        Command::EnumeratePm { graph, max_pm } => {
            let g = resolve(&graph)?;
            let cat = catalog(&g, max_pm)?;
            if cli.json {
                let pms: Vec<String> = cat.matchings().iter().map(|pm| format_matching(&g, pm)).collect();
                print_json(&json!({ "count": cat.len(), "matchings": pms }));
            } else {
                let _ = write!(io::stdout(), "{}", cat.export());
            }
        }
        Command::Gen {
            name,
            params,
            g6,
            seed,
        } => {
            let mut args: Vec<String> = params.iter().map(usize::to_string).collect();
            if name.eq_ignore_ascii_case("random") && args.len() == 1 {
                args.push(seed.to_string());
            }
            let spec = if args.is_empty() {
                name
            } else {
                format!("{name}({})", args.join(","))
            };
            let g = named_graph(&spec).map_err(usage)?;
            print_graph(&g, &[], g6, cli.json)?;
        }
        Command::Compose { op, operands, g6 } => {
            let comp = compose(op, &operands)?;
            print_graph(&comp.graph, &comp.cuts.iter().map(|c| c.to_vec()).collect::<Vec<_>>(), g6, cli.json)?;
        }
        Command::Scan {
            input,
            output,
            cap,
            odd_cap,
            timeout_s,
            jobs,
            max_pm,
        } => {
            let opts = ScanOptions {
                tau_cap: cap,
                odd_cap,
                timeout: Duration::from_secs(timeout_s),
                jobs,
                max_pm,
            };
            let summary = run_scan(&input, &output, &opts)?;
            if cli.json {
                print_json(&summary);
            } else {
                out!(
                    "{} graphs: {} computed, {} already in {}",
                    summary.inputs,
                    summary.computed,
                    summary.resumed,
                    output.display()
                );
                for (tau, count) in &summary.by_tau {
                    out!("  tau {tau}: {count}");
                }
                for (id, flags) in &summary.flagged {
                    out!("  flagged {id}: {}", flags.join(", "));
                }
            }
        }
        Command::VerifyPaper => {
            let outcomes = verify_all();
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if cli.json {
                let rows: Vec<_> = outcomes
                    .iter()
                    .map(|o| {
                        json!({
                            "criterion": o.id,
                            "name": o.name,
                            "passed": o.passed,
                            "detail": o.detail,
                            "elapsed_s": o.elapsed.as_secs_f64(),
                            "budget_s": o.budget.as_secs_f64(),
                        })
                    })
                    .collect();
                print_json(&rows);
            } else {
                for o in &outcomes {
                    out!("{}", o.line());
                }
            }
            if failed > 0 {
                return Err(CliError::CheckFailed(format!("{failed} criteria failed")));
            }
        }
    }
    Ok(())
}

fn compose(op: ComposeOp, operands: &[String]) -> Result<Composition, CliError> {
    let blocks = match op {
        ComposeOp::TwoCut | ComposeOp::ThreeCut => 2,
        ComposeOp::K4 => 4,
    };
    if operands.len() != 2 * blocks {
        return Err(usage(format!(
            "expected {blocks} graph and index pairs, got {} arguments",
            operands.len()
        )));
    }
    let mut parsed = Vec::new();
    for pair in operands.chunks(2) {
        let g = resolve(&pair[0])?;
        let i: usize = pair[1]
            .parse()
            .map_err(|_| usage(format!("{:?} is not an index", pair[1])))?;
        parsed.push((g, i));
    }
    let (g1, i1) = (&parsed[0].0, parsed[0].1);
    let (g2, i2) = (&parsed[1].0, parsed[1].1);
    match op {
        ComposeOp::TwoCut => two_cut_join(g1, i1, g2, i2),
        ComposeOp::ThreeCut => three_cut_join(g1, i1, g2, i2),
        ComposeOp::K4 => k4_composition([
            (g1, i1),
            (g2, i2),
            (&parsed[2].0, parsed[2].1),
            (&parsed[3].0, parsed[3].1),
        ]),
    }
    .map_err(usage)
}

fn print_graph(g: &CubicGraph, cuts: &[Vec<usize>], g6_only: bool, as_json: bool) -> Result<(), CliError> {
    let g6 = to_graph6(g).map_err(usage)?;
    if g6_only {
        out!("{g6}");
    } else if as_json {
        print_json(&json!({ "n": g.n(), "m": g.m(), "graph6": g6, "edges": g.edges(), "cuts": cuts }));
    } else {
        out!("n = {}, m = {}, graph6 {g6}", g.n(), g.m());
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            out!("  {i}: {u}-{v}");
        }
        for cut in cuts {
            out!("  cut {cut:?}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
