//! `offsetsing`: singular points of offsets to rational plane curves.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use offsing::classify::ClassifyOptions;
use offsing::curve_file::{parse_curve_file, parse_rational};
use offsing::offset::{build_offset_system, mobius_reparametrize, CurveSpec};
use offsing::oracle::{
    implicit_offset, implicit_residual_failures, normalize_implicit, numeric_singularity_scan, squarefree_offset_check,
    superset_violations, verify_sres1_vanishing, DEFAULT_CAP,
};
use offsing::report::{analyze, emit_report, reducible_report, report_from, Report};
use offsing::solver::SolverOptions;
use offsing::svg::{auto_window, emit_svg, Window};
use offsing::Error;

const EXIT_REDUCIBLE: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "offsetsing",
    version,
    about = "Parameters generating the singularities of offsets to rational curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute, classify and report the singular parameters of one offset.
    Compute(ComputeArgs),
    /// Run the independent checks on one offset.
    Verify(CurveArgs),
    /// Run every curve file of a directory.
    Bench(BenchArgs),
}

#[derive(Args, Clone)]
struct CurveArgs {
    /// Curve file (JSON).
    #[arg(long)]
    curve: PathBuf,
    /// Offset distance, overriding the file's `d`.
    #[arg(long, allow_hyphen_values = true)]
    distance: Option<String>,
    /// Bits of the isolating intervals.
    #[arg(long, default_value_t = 53)]
    precision: u32,
    /// Reparametrize with t = (a s + b)/(c s + e) first.
    #[arg(long, value_name = "a,b,c,e", allow_hyphen_values = true)]
    mobius: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Write an SVG plot here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Plot window in curve coordinates.
    #[arg(long, value_name = "x0,y0,x1,y1", allow_hyphen_values = true)]
    window: Option<String>,
    /// Uniform parameter samples before adaptive refinement.
    #[arg(long, default_value_t = 800)]
    samples: usize,
    /// Record wall time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory of curve files.
    #[arg(long)]
    corpus: PathBuf,
    /// Write one report per curve into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 53)]
    precision: u32,
    /// Add wall times to reports and table.
    #[arg(long)]
    timing: bool,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidCurve(_)
            | Error::NonPositiveDistance
            | Error::SingularMobius
            | Error::EmptyWindow
            | Error::VanishingSubresultant => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = match cli.command {
        Command::Compute(a) => compute(&a),
        Command::Verify(a) => verify(&a),
        Command::Bench(a) => bench(&a),
    };
    match out {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_mobius(s: &str) -> CliResult<[i64; 4]> {
    let v: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Input(format!("--mobius `{s}`: expected four integers a,b,c,e")))?;
    v.try_into().map_err(|_| Failure::Input(format!("--mobius `{s}`: expected four integers a,b,c,e")))
}

fn load(a: &CurveArgs) -> CliResult<(CurveSpec, Option<[i64; 4]>)> {
    let mut c = parse_curve_file(&read(&a.curve)?)?;
    if let Some(d) = &a.distance {
        let d = parse_rational(d).map_err(|m| Failure::Input(format!("--distance: {m}")))?;
        c = c.with_distance(d)?;
    }
    let m = a.mobius.as_deref().map(parse_mobius).transpose()?;
    if let Some([ma, mb, mc, me]) = m {
        c = mobius_reparametrize(&c, ma, mb, mc, me)?;
    }
    Ok((c, m))
}

/// Report for one curve; no analysis when the offset is reducible.
fn run_curve(c: &CurveSpec, precision: u32, timing: bool) -> CliResult<(Report, Option<offsing::report::Analysis>)> {
    let opts = SolverOptions { precision_bits: precision, ..SolverOptions::default() };
    match analyze(c, opts, ClassifyOptions::default()) {
        Ok(a) => {
            let mut r = report_from(c, &a);
            if timing {
                r.wall_time_ms = Some(a.elapsed_ms);
            }
            Ok((r, Some(a)))
        }
        Err(Error::ReducibleOffset) => Ok((reducible_report(c, precision), None)),
        Err(e) => Err(e.into()),
    }
}

fn compute(a: &ComputeArgs) -> CliResult<u8> {
    if a.curve.precision == 0 {
        return Err(Failure::Input("--precision must be positive".into()));
    }
    let window = a.window.as_deref().map(Window::parse).transpose()?;
    let (c, mobius) = load(&a.curve)?;
    let (mut report, analysis) = run_curve(&c, a.curve.precision, a.timing)?;
    report.mobius = mobius;
    let text = emit_report(&report);
    match &a.report {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    let Some(analysis) = analysis else {
        eprintln!("offset of `{}` is reducible: U^2 + V^2 is a perfect square", c.name);
        return Ok(EXIT_REDUCIBLE);
    };
    if report.flags.gcd_omega_w_nonconstant {
        eprintln!("note: gcd(ω*, W) is nonconstant; its roots were removed from ω");
    }
    if let Some(p) = &a.svg {
        let w = window.unwrap_or_else(|| auto_window(&c, &report));
        write(p, &emit_svg(&c, &analysis.result.system, &report, &w, a.samples)?)?;
    }
    Ok(0)
}

fn verify(a: &CurveArgs) -> CliResult<u8> {
    let (c, _) = load(a)?;
    let (_, analysis) = run_curve(&c, a.precision, false)?;
    let Some(an) = analysis else {
        println!("reducible offset: nothing to verify");
        return Ok(EXIT_REDUCIBLE);
    };
    let mut ok = true;
    let mut line = |name: &str, pass: bool, detail: String| {
        ok &= pass;
        println!("{} {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    };

    let hits = numeric_singularity_scan(&c, 4000, 1e-12);
    let missing = superset_violations(&hits, &an.result.roots.roots, 1e-6);
    line(
        "superset",
        missing.is_empty(),
        format!("{} numeric singularities, {} outside B {:?}", hits.len(), missing.len(), missing),
    );

    let v = verify_sres1_vanishing(&an.result, &c, &an.classification.roots, 128);
    line("sres1-vanishing", v, format!("{} roots", an.result.n_p()));

    let sys = build_offset_system(&c)?;
    match implicit_offset(&sys, DEFAULT_CAP) {
        Ok(h) => {
            let h = normalize_implicit(&h);
            let sq = squarefree_offset_check(&h, &c, 5, 1);
            line("squarefree", sq, "5 trials".into());
            let bad = implicit_residual_failures(&h, &c, &sys, 20, 1);
            line("implicit-residual", bad == 0, format!("{bad} of 20 sample points off the implicit equation"));
        }
        Err(Error::CapExceeded(n, cap)) => println!("SKIP squarefree: deg_t P + deg_t Q = {n} exceeds {cap}"),
        Err(e) => return Err(e.into()),
    }
    Ok(if ok { 0 } else { EXIT_INTERNAL })
}

struct BenchRow {
    file: String,
    report: Report,
}

fn bench(a: &BenchArgs) -> CliResult<u8> {
    let mut files: Vec<PathBuf> = fs::read_dir(&a.corpus)
        .map_err(|e| Failure::Input(format!("{}: {e}", a.corpus.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Failure::Input(format!("no curve files in {}", a.corpus.display())));
    }
    let rows: Vec<CliResult<BenchRow>> = files
        .par_iter()
        .map(|p| {
            let c = parse_curve_file(&read(p)?)?;
            let (report, _) = run_curve(&c, a.precision, a.timing)?;
            let file = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(BenchRow { file, report })
        })
        .collect();
    let rows: Vec<BenchRow> = rows.into_iter().collect::<CliResult<_>>()?;

    if let Some(dir) = &a.out {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        for r in &rows {
            write(&dir.join(format!("{}.json", r.file)), &emit_report(&r.report))?;
        }
    }
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    println!(
        "{:<12} {:>8} {:>5} {:>6} {:>7} {:>5} {:>5}{}",
        "curve",
        "d",
        "n_p",
        "δ_t",
        "τ",
        "P",
        "Q",
        if a.timing { "  ms" } else { "" }
    );
    for r in &rows {
        let p = &r.report;
        let mut s = format!(
            "{:<12} {:>8} {:>5} {:>6} {:>7} {:>5} {:>5}",
            r.file,
            p.d,
            p.n_p,
            opt(p.delta_t),
            p.tau.map_or("-".to_string(), |x| x.to_string()),
            opt(p.deg_t_p),
            opt(p.deg_t_q)
        );
        if let Some(ms) = p.wall_time_ms {
            s.push_str(&format!("  {ms}"));
        }
        println!("{s}");
    }
    Ok(0)
}
