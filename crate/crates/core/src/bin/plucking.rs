use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use plucking::plucking::{
    family_1_4k_1, family_1a3k1b, hedgehog_anti_unimodal, hedgehog_delay12, DelayedHedgehog,
    Plucker,
};
use plucking::qpoly::{factor_quantum, is_strictly_unimodal, is_symmetric, is_unimodal};
use plucking::search::golden::{self, FAMILY_14K1_VERDICTS, GARSTKA_VERDICTS};
use plucking::search::report::{write_report, ReportFormat};
use plucking::search::{
    check_garstka_report, check_prop33, check_prop35_and_corollary, embedding_invariance_test,
    scan_anti_unimodal, scan_family_1_4k_1_report, scan_general_trees_anti_unimodal,
    scan_hedgehog_delays, two_branch_check, verify_conjecture_12, ScanOptions, ScanReport,
    SearchError,
};
use plucking::tree::{parse_delayed_tree, parse_hedgehog_shorthand, parse_tree, DelayedTree};
use plucking::QPolynomial;

/// Plucking polynomials of plane rooted trees.
#[derive(Parser, Debug)]
#[command(name = "plucking", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Q(T) of a plain tree.
    Compute(ComputeArgs),
    /// Q(T, f) of a delayed tree or a delayed hedgehog.
    Delay(DelayArgs),
    /// Evaluate a hedgehog closed form.
    ClosedForm(ClosedFormArgs),
    /// Shape verdicts for a coefficient list.
    Check(PolyArgs),
    /// Factor out q^m and quantum integers.
    Factor(PolyArgs),
    /// Exhaustive scan, writing a report and printing a summary.
    Scan(ScanArgs),
    /// Run an assertion suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Output {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Tree in parenthesis notation, e.g. "(()(()()))".
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    tree: Option<String>,
    /// One tree per line.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    output: Output,
}

#[derive(Args, Debug)]
struct DelayArgs {
    /// Delayed tree, e.g. "(2((3))1)".
    #[arg(long, group = "input")]
    tree: Option<String>,
    /// Hedgehog delays: "32123", "3 2 1 2 3" or "1^2 4^2 1^2".
    #[arg(long, group = "input")]
    hedgehog: Option<String>,
    /// One input per line; lines starting with '(' are delayed trees,
    /// anything else is hedgehog shorthand.
    #[arg(long, group = "input")]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    output: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    AntiUnimodal,
    Delay12,
    #[value(name = "14k1")]
    F14k1,
    #[value(name = "1a3k1b")]
    F1a3k1b,
}

#[derive(Args, Debug)]
struct ClosedFormArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Hedgehog delays for anti-unimodal and delay12.
    #[arg(long)]
    delays: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Also run the recursion and fail on disagreement.
    #[arg(long)]
    cross_check: bool,
    #[arg(long, value_enum, default_value_t)]
    output: Output,
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Comma-separated coefficients from q^0, e.g. "1,2,2,1".
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, value_enum, default_value_t)]
    output: Output,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Jsonl,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Jsonl => ReportFormat::Jsonl,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum ScanMode {
    /// Every delay sequence over --values.
    #[default]
    Hedgehog,
    /// Anti-unimodal hedgehog delays, closed form against recursion.
    AntiUnimodal,
    /// Anti-unimodal delays on random trees (exploratory).
    GeneralTrees,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Write records here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 picks automatically).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Refuse scans larger than this many records.
    #[arg(long)]
    limit: Option<usize>,
}

impl RunArgs {
    fn options(&self) -> ScanOptions {
        ScanOptions {
            jobs: self.jobs,
            record_limit: self.limit,
        }
    }
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, value_enum, default_value_t)]
    mode: ScanMode,
    /// Largest leaf count (edge count for general-trees).
    #[arg(long)]
    max_leaves: usize,
    #[arg(long, default_value_t = 1)]
    min_leaves: usize,
    /// Delay values for the hedgehog mode.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    values: Vec<u32>,
    /// Largest delay value for the anti-unimodal modes.
    #[arg(long, default_value_t = 3)]
    max_value: u32,
    /// Random trees drawn in general-trees mode.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Conjecture12,
    Prop33,
    Prop35,
    Garstka,
    #[value(name = "14k1")]
    F14k1,
    AntiUnimodal,
    Embedding,
    TwoBranch,
    #[value(name = "paper-all", alias = "all")]
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Size bound; its meaning and default depend on the suite.
    #[arg(long)]
    max_leaves: Option<usize>,
    #[arg(long)]
    max_value: Option<u32>,
    #[command(flatten)]
    run: RunArgs,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            message: message.to_string(),
        }
    }

    fn finding(message: impl std::fmt::Display) -> Self {
        Self {
            code: 1,
            message: message.to_string(),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::InvalidParameter(_) => Failure::usage(e),
            _ => Failure::finding(e),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::finding(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::finding(e)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Delay(a) => cmd_delay(a),
        Command::ClosedForm(a) => cmd_closed_form(a),
        Command::Check(a) => cmd_check(a),
        Command::Factor(a) => cmd_factor(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn print_poly(out: &mut impl Write, q: &QPolynomial, mode: Output) -> io::Result<()> {
    match mode {
        Output::Text => writeln!(out, "{q}"),
        Output::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(q).map_err(io::Error::other)?
        ),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn read_lines(path: &Path) -> Result<Vec<(usize, String)>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect())
}

fn cmd_compute(args: ComputeArgs) -> Outcome {
    let inputs = match (&args.tree, &args.file) {
        (Some(t), _) => vec![(0, t.clone())],
        (None, Some(path)) => read_lines(path)?,
        (None, None) => unreachable!("clap requires --tree or --file"),
    };
    let mut plucker = Plucker::new();
    let mut out = io::stdout().lock();
    for (line, text) in inputs {
        let tree = parse_tree(&text).map_err(|e| Failure::usage(at_line(line, e)))?;
        print_poly(&mut out, &plucker.plain(&tree), args.output)?;
    }
    Ok(0)
}

fn at_line(line: usize, e: impl std::fmt::Display) -> String {
    if line == 0 {
        e.to_string()
    } else {
        format!("line {line}: {e}")
    }
}

fn parse_delay_input(text: &str) -> Result<DelayedTree, String> {
    let parsed = if text.starts_with('(') {
        parse_delayed_tree(text).map(|(tree, delays)| DelayedTree { tree, delays })
    } else {
        parse_hedgehog_shorthand(text).and_then(|d| DelayedTree::hedgehog(&d))
    };
    parsed.map_err(|e| e.to_string())
}

fn cmd_delay(args: DelayArgs) -> Outcome {
    let inputs = if let Some(t) = &args.tree {
        let (tree, delays) = parse_delayed_tree(t).map_err(Failure::usage)?;
        vec![(0, DelayedTree { tree, delays })]
    } else if let Some(h) = &args.hedgehog {
        let d = parse_hedgehog_shorthand(h).map_err(Failure::usage)?;
        vec![(0, DelayedTree::hedgehog(&d).map_err(Failure::usage)?)]
    } else if let Some(path) = &args.file {
        read_lines(path)?
            .into_iter()
            .map(|(line, text)| {
                parse_delay_input(&text)
                    .map(|t| (line, t))
                    .map_err(|e| Failure::usage(at_line(line, e)))
            })
            .collect::<Result<_, _>>()?
    } else {
        return Err(Failure::usage(
            "one of --tree, --hedgehog or --file is required",
        ));
    };
    let mut plucker = Plucker::new();
    let mut out = io::stdout().lock();
    for (line, t) in inputs {
        let q = plucker
            .delayed(&t.tree, &t.delays)
            .map_err(|e| Failure::usage(at_line(line, e)))?;
        print_poly(&mut out, &q, args.output)?;
    }
    Ok(0)
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("--{flag} is required for family {family}")))
}

fn cmd_closed_form(args: ClosedFormArgs) -> Outcome {
    let (formula, delays) = match args.family {
        Family::AntiUnimodal => {
            let d = parse_hedgehog_shorthand(&require(args.delays, "delays", "anti-unimodal")?)
                .map_err(Failure::usage)?;
            let h = DelayedHedgehog::new(d.clone()).map_err(Failure::usage)?;
            (hedgehog_anti_unimodal(&h).map_err(Failure::usage)?, d)
        }
        Family::Delay12 => {
            let d = parse_hedgehog_shorthand(&require(args.delays, "delays", "delay12")?)
                .map_err(Failure::usage)?;
            let eps = DelayedHedgehog::new(d.clone())
                .map_err(Failure::usage)?
                .eps_vector()
                .ok_or_else(|| Failure::usage("delay12 needs delays in {1, 2}"))?;
            (hedgehog_delay12(&eps), d)
        }
        Family::F14k1 => {
            let k = require(args.k, "k", "14k1")?;
            let q = family_1_4k_1(k).map_err(Failure::usage)?;
            let mut d = vec![1, 1];
            d.extend(std::iter::repeat_n(4, k));
            d.extend([1, 1]);
            (q, d)
        }
        Family::F1a3k1b => {
            let a = require(args.a, "a", "1a3k1b")?;
            let k = require(args.k, "k", "1a3k1b")?;
            let b = require(args.b, "b", "1a3k1b")?;
            let q = family_1a3k1b(a, k, b).map_err(Failure::usage)?;
            let mut d = vec![1; a];
            d.extend(std::iter::repeat_n(3, k));
            d.extend(std::iter::repeat_n(1, b));
            (q, d)
        }
    };
    print_poly(&mut io::stdout().lock(), &formula, args.output)?;
    if args.cross_check {
        let t = DelayedTree::hedgehog(&delays).map_err(Failure::usage)?;
        let recursion = Plucker::new()
            .delayed(&t.tree, &t.delays)
            .map_err(Failure::usage)?;
        if recursion != formula {
            return Err(Failure::finding(format!(
                "closed form disagrees with the recursion, which gives {recursion}"
            )));
        }
        eprintln!("cross-check: recursion agrees");
    }
    Ok(0)
}

fn parse_poly(text: &str) -> Result<QPolynomial, Failure> {
    QPolynomial::parse_coeff_list(text).map_err(Failure::usage)
}

#[derive(Serialize)]
struct Verdicts {
    unimodal: bool,
    strictly_unimodal: bool,
    symmetric: bool,
}

fn cmd_check(args: PolyArgs) -> Outcome {
    let q = parse_poly(&args.poly)?;
    let v = Verdicts {
        unimodal: is_unimodal(&q),
        strictly_unimodal: is_strictly_unimodal(&q),
        symmetric: is_symmetric(&q),
    };
    match args.output {
        Output::Text => println!(
            "unimodal={} strictly_unimodal={} symmetric={}",
            v.unimodal, v.strictly_unimodal, v.symmetric
        ),
        Output::Json => print_json(&v)?,
    }
    Ok(0)
}

fn cmd_factor(args: PolyArgs) -> Outcome {
    let q = parse_poly(&args.poly)?;
    let f = factor_quantum(&q).map_err(Failure::usage)?;
    match args.output {
        Output::Text => println!("{f}"),
        Output::Json => print_json(&f)?,
    }
    Ok(0)
}

fn emit(report: &ScanReport, run: &RunArgs) -> Result<(), Failure> {
    if let Some(path) = &run.out {
        let file =
            File::create(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        write_report(BufWriter::new(file), &report.records, run.format.into())?;
    }
    if let Some(ms) = report.summary.elapsed_ms {
        eprintln!(
            "{}: {} records in {ms} ms",
            report.summary.suite, report.summary.total
        );
    }
    print_json(&report.summary.clone().without_timing())
}

fn cmd_scan(args: ScanArgs) -> Outcome {
    let opts = args.run.options();
    let report = match args.mode {
        ScanMode::Hedgehog => {
            scan_hedgehog_delays(args.min_leaves, args.max_leaves, &args.values, &opts)?
        }
        ScanMode::AntiUnimodal => scan_anti_unimodal(args.max_leaves, args.max_value, &opts)?,
        ScanMode::GeneralTrees => scan_general_trees_anti_unimodal(
            args.max_leaves,
            args.max_value,
            args.run.seed,
            args.samples,
            &opts,
        )?,
    };
    emit(&report, &args.run)?;
    Ok(if report.summary.non_unimodal.is_empty() {
        0
    } else {
        1
    })
}

fn expect_verdicts(report: &ScanReport, expected: &[bool]) -> Result<(), Failure> {
    for (rec, &want) in report.records.iter().zip(expected) {
        if rec.unimodal != want {
            return Err(Failure::finding(format!(
                "{}: unimodal={} but expected {want}",
                rec.input_descriptor, rec.unimodal
            )));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct AllSummary {
    suite: &'static str,
    passed: usize,
    failed: usize,
    checks: Vec<golden::GoldenCheck>,
}

fn cmd_verify(args: VerifyArgs) -> Outcome {
    let opts = args.run.options();
    let n = args.max_leaves;
    let report = match args.suite {
        Suite::Conjecture12 => verify_conjecture_12(n.unwrap_or(8), &opts)?,
        Suite::Prop33 => check_prop33(n.unwrap_or(10), &opts)?,
        Suite::Prop35 => check_prop35_and_corollary(n.unwrap_or(8), &opts)?,
        Suite::Garstka => {
            let r = check_garstka_report();
            emit(&r, &args.run)?;
            expect_verdicts(&r, &GARSTKA_VERDICTS)?;
            return Ok(0);
        }
        Suite::F14k1 => {
            let r = scan_family_1_4k_1_report(n.unwrap_or(10))?;
            emit(&r, &args.run)?;
            expect_verdicts(&r, &FAMILY_14K1_VERDICTS)?;
            return Ok(0);
        }
        Suite::AntiUnimodal => {
            scan_anti_unimodal(n.unwrap_or(6), args.max_value.unwrap_or(4), &opts)?
        }
        Suite::Embedding => {
            embedding_invariance_test(n.unwrap_or(10), 100, 5, args.run.seed, &opts)?
        }
        Suite::TwoBranch => {
            let m = n.unwrap_or(6);
            two_branch_check(m, m)?
        }
        Suite::All => {
            let checks = golden::run_all(&opts);
            for c in checks.iter().filter(|c| !c.passed) {
                eprintln!("FAIL {} {}: {}", c.id, c.name, c.detail);
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            print_json(&AllSummary {
                suite: "paper-all",
                passed: checks.len() - failed,
                failed,
                checks,
            })?;
            return Ok(if failed == 0 { 0 } else { 1 });
        }
    };
    emit(&report, &args.run)?;
    if !report.summary.non_unimodal.is_empty() {
        return Err(Failure::finding(format!(
            "non-unimodal records: {}",
            report.summary.non_unimodal.join(", ")
        )));
    }
    Ok(0)
}
