use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bipan_core::conditions::{check_condition_a, check_degree_cap, check_min_degree, Verdict};
use bipan_core::cycles::{cycle_spectrum, is_directed_2a_cycle};
use bipan_core::lab::{run_spec, Hypothesis, LabBudget, Mode, SearchSpec, Status};
use bipan_core::{
    diagnose_proof_path, parse_digraph, random_bipartite, write_digraph, BipartiteDigraph, Digraph, TraceError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_CONTRADICTION: u8 = 4;

#[derive(Parser)]
#[command(name = "bipan", version, about = "Bipancyclicity checks for balanced bipartite digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report strong connectivity, condition A, the degree cap and the minimum degree.
    Check { file: PathBuf },
    /// Decide every even cycle length, with one certificate per present length.
    Spectrum { file: PathBuf },
    /// Walk the associated-digraph case analysis and print the trace.
    Trace { file: PathBuf },
    /// Sweep digraphs satisfying condition A for non-bipancyclic ones.
    Verify(SweepArgs),
    /// Search for witnesses under a relaxed pair bound 3a-k.
    Search {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Slack in the pair bound 3a-k.
        #[arg(long)]
        k: usize,
        /// Look for digraphs missing an even length up to 2l instead of a hamiltonian cycle.
        #[arg(long)]
        l: Option<usize>,
    },
    /// Write a digraph in the text format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        prob: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Complete,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMode {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    a: usize,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: SweepMode,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0.5)]
    prob: f64,
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Node limit for each individual cycle search.
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    workers: Option<usize>,
    /// Allow exhaustive sweeps beyond a = 3.
    #[arg(long)]
    allow_large: bool,
    /// Write machine-format records (JSON lines) here.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

fn load(path: &Path) -> Result<BipartiteDigraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_digraph(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn verdict_line(name: &str, v: &Verdict, d: &BipartiteDigraph) -> String {
    match v.witness() {
        None => format!("{name}: ok"),
        Some(w) => format!("{name}: violated ({})", w.describe(d)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(file: &Path) -> Result<u8, Failure> {
    let d = load(file)?;
    let strong = d.is_strongly_connected();
    let cond_a = check_condition_a(&d);
    let order_ok = d.part_size() >= 3;
    println!("a: {}", d.part_size());
    println!("arcs: {}", d.arc_count());
    println!("strongly connected: {}", yes_no(strong));
    println!("{}", verdict_line("condition A", &cond_a, &d));
    println!("{}", verdict_line("degree cap", &check_degree_cap(&d), &d));
    println!("{}", verdict_line("min degree", &check_min_degree(&d), &d));
    let holds = order_ok && strong && cond_a.is_ok();
    println!("hypotheses: {}", if holds { "hold" } else { "fail" });
    Ok(if holds { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_spectrum(file: &Path) -> Result<u8, Failure> {
    let d = load(file)?;
    let s = cycle_spectrum(&d);
    let mut summary: Vec<String> = s.entries().map(|(len, c)| format!("{len}:{}", yes_no(c.is_some()))).collect();
    summary.push(format!("bipancyclic:{}", yes_no(s.is_bipancyclic())));
    summary.push(format!("exceptional-cycle:{}", yes_no(is_directed_2a_cycle(&d))));
    println!("{}", summary.join(" "));
    for (len, c) in s.entries() {
        if let Some(c) = c {
            println!("{len}: {}", c.render(&d));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_trace(file: &Path) -> Result<u8, Failure> {
    let d = load(file)?;
    match diagnose_proof_path(&d) {
        Ok(t) => {
            print!("{}", t.render(&d));
            Ok(if t.certifies_bipancyclic(&d) { EXIT_OK } else { EXIT_CONTRADICTION })
        }
        Err(TraceError::Precondition(p)) => {
            println!("refused: {p}");
            Ok(EXIT_FAIL)
        }
        Err(e @ TraceError::ProofFailure(_)) => {
            println!("{e}");
            Ok(EXIT_CONTRADICTION)
        }
    }
}

fn cmd_sweep(args: &SweepArgs, hypothesis: Hypothesis) -> Result<u8, Failure> {
    let mode = match args.mode {
        SweepMode::Exhaustive => {
            if args.seed.is_some() {
                return Err(Failure::usage("--seed conflicts with --mode exhaustive"));
            }
            Mode::Exhaustive
        }
        SweepMode::Random => {
            let seed = args.seed.ok_or_else(|| Failure::usage("--mode random requires --seed"))?;
            Mode::Random { seed, samples: args.samples, arc_probability: args.prob }
        }
    };
    let spec = SearchSpec {
        a: args.a,
        mode,
        hypothesis,
        budget: LabBudget { seconds: args.budget_seconds, nodes: args.budget_nodes },
        allow_large_exhaustive: args.allow_large,
        workers: args.workers,
        prefilter: None,
    };
    let report = run_spec(&spec).map_err(|e| Failure::usage(e.to_string()))?;
    print!("{}", report.render());
    if let Some(path) = &args.out {
        fs::write(path, report.machine_format())
            .map_err(|e| Failure { code: EXIT_FAIL, message: format!("{}: {e}", path.display()) })?;
    }
    let contradicted = match hypothesis {
        Hypothesis::Theorem2 => !report.failures.is_empty(),
        Hypothesis::Sharpness { k: 0 } => !report.witnesses.is_empty(),
        _ => false,
    };
    Ok(if contradicted {
        EXIT_CONTRADICTION
    } else if report.status == Status::BudgetExhausted {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}

fn cmd_gen(family: Family, a: usize, prob: Option<f64>, seed: Option<u64>, out: Option<&Path>) -> Result<u8, Failure> {
    let d = match family {
        Family::Cycle => BipartiteDigraph::cycle(a).map_err(|e| Failure::usage(e.to_string()))?,
        Family::Complete => BipartiteDigraph::complete(a).map_err(|e| Failure::usage(e.to_string()))?,
        Family::Random => {
            let p = prob.ok_or_else(|| Failure::usage("--family random requires --prob"))?;
            let seed = seed.ok_or_else(|| Failure::usage("--family random requires --seed"))?;
            if !(p > 0.0 && p < 1.0) {
                return Err(Failure::usage(format!("--prob {p} must lie strictly between 0 and 1")));
            }
            BipartiteDigraph::new(a, std::iter::empty()).map_err(|e| Failure::usage(e.to_string()))?;
            random_bipartite(a, p, seed)
        }
    };
    if !matches!(family, Family::Random) && (prob.is_some() || seed.is_some()) {
        return Err(Failure::usage("--prob and --seed only apply to --family random"));
    }
    let text = write_digraph(&d);
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure { code: EXIT_FAIL, message: format!("{}: {e}", path.display()) })?,
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure { code: EXIT_FAIL, message: e.to_string() })?,
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { file } => cmd_check(file),
        Command::Spectrum { file } => cmd_spectrum(file),
        Command::Trace { file } => cmd_trace(file),
        Command::Verify(args) => cmd_sweep(args, Hypothesis::Theorem2),
        Command::Search { sweep, k, l } => {
            let hypothesis = match *l {
                Some(l) => Hypothesis::OpenQuestion { k: *k, l },
                None => Hypothesis::Sharpness { k: *k },
            };
            cmd_sweep(sweep, hypothesis)
        }
        Command::Gen { family, a, prob, seed, out } => cmd_gen(*family, *a, *prob, *seed, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
