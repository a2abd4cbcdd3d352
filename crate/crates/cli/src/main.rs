use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use petalforge::braid::{braids_equal, normal_form, BraidWord};
use petalforge::petal::{render_svg, SvgStyle};
use petalforge::torus::{certify_knot_type, petal_number_status, trace_pipeline, CertificateKind, PipelineTrace, TorusPair};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

/// Largest `s` accepted by `sweep`.
const SWEEP_CAP: u32 = 12;
/// Longest petal diagram whose knot type is checked through its planar diagram.
const PD_ROUTE_LIMIT: usize = 15;

#[derive(Parser, Debug)]
#[command(name = "petalforge", version, about = "Petal diagrams for torus knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the petal permutation of T(r,s)
    Synth {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = Format::Petal)]
        format: Format,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every certificate of the braid rewriting for T(r,s)
    Verify {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        /// Also compare Alexander polynomials of the petal diagram
        #[arg(long)]
        deep: bool,
    },
    /// Verify all coprime 1 < r < s <= smax
    Sweep {
        #[arg(long)]
        smax: u32,
        #[arg(long)]
        deep: bool,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Shuffle the work order; output is unaffected
        #[arg(long, hide = true)]
        seed: Option<u64>,
    },
    /// Braid word utilities
    Braid {
        #[command(subcommand)]
        action: BraidAction,
    },
}

#[derive(Subcommand, Debug)]
enum BraidAction {
    /// Print the left normal form
    Nf {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Exit 0 when the two words are the same braid
    Eq {
        #[arg(long)]
        strands: usize,
        left: String,
        right: String,
    },
    /// Print the underlying permutation
    Perm {
        #[arg(long)]
        strands: usize,
        word: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Petal,
    Svg,
}

/// Outcome of one pair, gathered before anything is printed.
struct PairReport {
    pair: TorusPair,
    trace: PipelineTrace,
    lines: Vec<String>,
    failed: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Synth { r, s, format, out } => synth(r, s, format, out),
        Command::Verify { r, s, deep } => {
            let report = verify_pair(TorusPair::normalized(r, s)?, deep)?;
            for line in &report.lines {
                println!("{line}");
            }
            Ok(report.failed == 0)
        }
        Command::Sweep { smax, deep, jobs, seed } => sweep(smax, deep, jobs, seed),
        Command::Braid { action } => braid(action),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn synth(r: u32, s: u32, format: Format, out: Option<PathBuf>) -> Result<bool> {
    let pair = TorusPair::normalized(r, s)?;
    let mut trace = trace_pipeline(pair)?;
    let failed = trace.failures().count();
    if failed > 0 {
        bail!("{failed} certificates failed for T({},{})", pair.r(), pair.s());
    }
    let text = match format {
        Format::Petal => format!("{}\n", trace.final_petal),
        Format::Svg => render_svg(&trace.final_petal, &SvgStyle::default()),
        Format::Json => {
            trace.invariants = Some(certify_knot_type(pair, &trace.final_petal, PD_ROUTE_LIMIT)?);
            let mut json = serde_json::to_string_pretty(&trace)?;
            json.push('\n');
            json
        }
    };
    emit(&text, out.as_ref())?;
    Ok(trace.is_verified())
}

fn verify_pair(pair: TorusPair, deep: bool) -> Result<PairReport> {
    let started = Instant::now();
    let mut trace = trace_pipeline(pair)?;
    let chain_time = started.elapsed();
    let count = |kind: CertificateKind| {
        let all: Vec<_> = trace.certificates.iter().filter(|c| c.kind == kind).collect();
        (all.iter().filter(|c| c.ok).count(), all.len())
    };
    let chain: Vec<_> =
        trace.certificates.iter().filter(|c| c.kind == CertificateKind::Equal && c.from.starts_with("line")).collect();
    let chain_ok = chain.iter().filter(|c| c.ok).count();

    let mut lines = vec![format!("T({},{})", pair.r(), pair.s())];
    lines.push(format!("  chain equalities: {chain_ok}/{}", chain.len()));
    for (name, kind) in [
        ("containments", CertificateKind::Containment),
        ("conjugations", CertificateKind::Conjugate),
        ("destabilizations", CertificateKind::Destabilize),
        ("alexander (closure moves)", CertificateKind::Alexander),
    ] {
        let (ok, total) = count(kind);
        lines.push(format!("  {name}: {ok}/{total}"));
    }
    for bad in trace.failures() {
        lines.push(format!("  FAILED {:?} {} -> {}", bad.kind, bad.from, bad.to));
    }
    lines.push(format!("  petal length: {} (bound {})", trace.final_petal.len(), pair.petal_bound()));
    let mut failed = trace.failures().count();
    if trace.final_petal.len() as u32 != pair.petal_bound() {
        failed += 1;
    }
    if deep {
        let started = Instant::now();
        let summary = certify_knot_type(pair, &trace.final_petal, PD_ROUTE_LIMIT)?;
        lines.push(format!(
            "  alexander ({} route): {} [{}]",
            summary.route,
            if summary.matched { "matched" } else { "MISMATCH" },
            summary.alexander
        ));
        if !summary.matched {
            failed += 1;
        }
        eprintln!("T({},{}) invariants: {:?}", pair.r(), pair.s(), started.elapsed());
        trace.invariants = Some(summary);
    }
    let status = petal_number_status(pair.r(), pair.s())?;
    lines.push(match status.exact {
        Some(exact) => format!("  petal number: exactly {exact}"),
        None => format!("  petal number: at most {}", status.upper_bound),
    });
    eprintln!("T({},{}) chain: {:?}", pair.r(), pair.s(), chain_time);
    Ok(PairReport { pair, trace, lines, failed })
}

fn sweep(smax: u32, deep: bool, jobs: Option<usize>, seed: Option<u64>) -> Result<bool> {
    if smax > SWEEP_CAP {
        bail!("smax {smax} exceeds the cap of {SWEEP_CAP}");
    }
    let mut pairs: Vec<TorusPair> =
        TorusPair::sweep(smax).into_iter().map(|(r, s)| TorusPair::new(r, s)).collect::<Result<_, _>>()?;
    if let Some(seed) = seed {
        pairs.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build()?;
    let mut reports: Vec<PairReport> =
        pool.install(|| pairs.par_iter().map(|&p| verify_pair(p, deep)).collect::<Result<_>>())?;
    reports.sort_by_key(|rep| (rep.pair.s(), rep.pair.r()));

    let mut failed_pairs = 0;
    let mut passed = 0;
    let mut failed = 0;
    for rep in &reports {
        for line in &rep.lines {
            println!("{line}");
        }
        passed += rep.trace.passed();
        failed += rep.failed;
        if rep.failed > 0 {
            failed_pairs += 1;
        }
    }
    println!(
        "pairs: {} attempted, {} failed; certificates: {passed} passed, {failed} failed",
        reports.len(),
        failed_pairs
    );
    Ok(failed == 0)
}

fn braid(action: BraidAction) -> Result<bool> {
    match action {
        BraidAction::Nf { strands, word } => {
            let nf = normal_form(&BraidWord::parse(strands, &word)?);
            let mut line = format!("delta^{}", nf.delta_power);
            for f in &nf.factors {
                line.push(' ');
                line.push_str(&f.to_string());
            }
            println!("{line}");
            Ok(true)
        }
        BraidAction::Eq { strands, left, right } => {
            let equal = braids_equal(&BraidWord::parse(strands, &left)?, &BraidWord::parse(strands, &right)?)?;
            println!("{}", if equal { "equal" } else { "different" });
            Ok(equal)
        }
        BraidAction::Perm { strands, word } => {
            println!("{}", BraidWord::parse(strands, &word)?.underlying_permutation());
            Ok(true)
        }
    }
}
