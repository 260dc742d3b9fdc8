//! Command line interface: signatures, orbit iteration, preimages, theorem
//! verification batches, the periodic-point census, and basin rasters.
//!
//! Exit codes: 0 success, 1 verification failure or census disagreement,
//! 2 usage/configuration error, 3 domain error (e.g. iterating from the
//! diagonal).

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use pappus_steiner::census::{census_prime, primes_in_range, CensusConfig, CycleReport};
use pappus_steiner::conic::verify_two_conics;
use pappus_steiner::dynamics::{raster, OrbitParams, Region};
use pappus_steiner::field::{Field, Fp, Prime, Rational, Tol};
use pappus_steiner::pappus::{
    verify_circ_conjugation, verify_involution, verify_leisenring, verify_pappus,
    verify_rigby_harmonic, verify_signature_symmetries, verify_steiner, PappusConfig, VerifyReport,
};
use pappus_steiner::psmap::{orbit, preimages, ps_map, stratum, SigPoint};
use pappus_steiner::Error as CoreError;

/// Default seed for every randomized verification; override with --seed.
const DEFAULT_SEED: u64 = 17;

#[derive(Parser)]
#[command(
    name = "pappus-steiner",
    version,
    about = "Exact projective geometry and arithmetic dynamics of the Pappus-Steiner map"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Signature of the standard structure C(r, s), its Steiner image
    /// computed geometrically, and the map image computed by formula.
    Signature {
        /// First cross-ratio, as an integer or n/d fraction.
        #[arg(short, long, allow_hyphen_values = true)]
        r: String,
        /// Second cross-ratio.
        #[arg(short, long, allow_hyphen_values = true)]
        s: String,
    },
    /// Iterate the map, printing one JSON line per step with its stratum.
    Iterate {
        /// Field: rational, fp:P for a prime P, or real.
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(short, long, allow_hyphen_values = true)]
        x: String,
        #[arg(short, long, allow_hyphen_values = true)]
        y: String,
        /// Number of steps to attempt.
        #[arg(short = 'n', long, default_value_t = 10)]
        steps: usize,
    },
    /// The fiber of the map over a point.
    Preimage {
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(short, long, allow_hyphen_values = true)]
        x: String,
        #[arg(short, long, allow_hyphen_values = true)]
        y: String,
        /// Relative tolerance for the ramification branch over real inputs.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Run a seeded verification batch and report per-trial records.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Brute-force periodic-point census against the congruence predictions.
    Census {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Period to scan for (3 or 4).
        #[arg(long)]
        period: u32,
        #[arg(long, value_enum, default_value_t = CensusFormat::Csv)]
        format: CensusFormat,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Extra exempt primes (comma separated).
        #[arg(long, value_delimiter = ',')]
        exempt: Vec<u64>,
        /// Work budget in map steps; each prime costs p^2.
        #[arg(long, default_value_t = 400_000_000)]
        budget: u64,
    },
    /// Classify the pixel grid of a region and emit a PGM basin image.
    Raster {
        #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
        xmin: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        xmax: f64,
        #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
        ymin: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        ymax: f64,
        #[arg(long, default_value_t = 400)]
        width: usize,
        #[arg(long, default_value_t = 400)]
        height: usize,
        #[arg(long = "max-iter", default_value_t = 1000)]
        max_iter: usize,
        /// Escape radius beyond which an orbit counts as diverged.
        #[arg(long, default_value_t = 1e6)]
        escape: f64,
        /// Attractor proximity tolerance.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Relative near-diagonal threshold.
        #[arg(long = "undefined-tol", default_value_t = 1e-12)]
        undefined_tol: f64,
        /// Pixel budget guarding accidental huge grids.
        #[arg(long, default_value_t = 1 << 24)]
        budget: usize,
        /// Output PGM path.
        #[arg(long)]
        out: PathBuf,
        /// Optional CSV with one row per pixel.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Pappus,
    Steiner,
    Leisenring,
    Conics,
    Involution,
    Alpha,
    Beta,
    /// Rigby's harmonic separation of L, M by PE', PE.
    Harmonic,
    /// The matrix conjugation between C(r, s) and C(r°, s°).
    Circ,
    /// Signature invariance under the 6 x 6 x 2 parameter symmetries.
    Symmetries,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Csv,
    Json,
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::config(format!("{e:#}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Signature { r, s } => cmd_signature(&r, &s),
        Cmd::Iterate { field, x, y, steps } => cmd_iterate(&field, &x, &y, steps),
        Cmd::Preimage { field, x, y, tol } => cmd_preimage(&field, &x, &y, tol),
        Cmd::Verify {
            target,
            trials,
            seed,
        } => cmd_verify(target, trials, seed),
        Cmd::Census {
            from,
            to,
            period,
            format,
            out,
            exempt,
            budget,
        } => cmd_census(from, to, period, format, out, exempt, budget),
        Cmd::Raster {
            xmin,
            xmax,
            ymin,
            ymax,
            width,
            height,
            max_iter,
            escape,
            tol,
            undefined_tol,
            budget,
            out,
            csv,
        } => {
            let region = Region {
                xmin,
                xmax,
                ymin,
                ymax,
            };
            let params = OrbitParams {
                max_iter,
                escape_radius: escape,
                attractor_tol: tol,
                undefined_tol,
                ..OrbitParams::default()
            };
            cmd_raster(region, width, height, &params, budget, &out, csv.as_deref())
        }
    }
}

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

enum FieldChoice {
    Rational,
    Prime(Prime),
    Real,
}

fn parse_field(selector: &str) -> Result<FieldChoice, Failure> {
    match selector {
        "rational" => Ok(FieldChoice::Rational),
        "real" => Ok(FieldChoice::Real),
        other => match other.strip_prefix("fp:") {
            Some(p) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Failure::config(format!("bad modulus in field '{other}'")))?;
                Prime::new(p)
                    .map(FieldChoice::Prime)
                    .map_err(|e| Failure::config(e.to_string()))
            }
            None => Err(Failure::config(format!(
                "unknown field '{other}' (expected rational, fp:<prime>, or real)"
            ))),
        },
    }
}

fn parse_rational(text: &str) -> Result<Rational, Failure> {
    Rational::from_str(text)
        .map_err(|e| Failure::config(format!("cannot parse '{text}' as a rational: {e}")))
}

fn parse_fp(p: Prime, text: &str) -> Result<Fp, Failure> {
    let v: i64 = text
        .parse()
        .map_err(|e| Failure::config(format!("cannot parse '{text}' as an integer: {e}")))?;
    Ok(p.elem(v))
}

fn parse_real(text: &str) -> Result<f64, Failure> {
    text.parse()
        .map_err(|e| Failure::config(format!("cannot parse '{text}' as a real: {e}")))
}

fn rational_value(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn fp_value(x: &Fp) -> Value {
    json!(x.residue())
}

fn println_json(v: &Value) {
    println!("{v}");
}

// ---------------------------------------------------------------------------
// signature
// ---------------------------------------------------------------------------

fn cmd_signature(r_text: &str, s_text: &str) -> Result<(), Failure> {
    let r = parse_rational(r_text)?;
    let s = parse_rational(s_text)?;
    let config = PappusConfig::standard(&r, &s).map_err(|e| Failure::config(e.to_string()))?;
    let sig = config
        .signature()
        .map_err(|e| Failure::config(e.to_string()))?;
    let sig_json = json!({"x": rational_value(&sig.x), "y": rational_value(&sig.y)});

    if sig.on_diagonal() {
        println_json(&json!({
            "r": r.to_string(),
            "s": s.to_string(),
            "signature": sig_json,
            "steiner_signature": Value::Null,
            "map_image": Value::Null,
        }));
        return Err(Failure::domain(
            "signature lies on the diagonal x = y; the Steiner image is undefined",
        ));
    }

    let geometric = config
        .steiner_structure()
        .and_then(|d| d.signature())
        .map_err(|e| Failure::domain(e.to_string()))?;
    let formula = ps_map(&sig).map_err(|e| Failure::domain(e.to_string()))?;
    let agree = geometric == formula;
    println_json(&json!({
        "r": r.to_string(),
        "s": s.to_string(),
        "signature": sig_json,
        "steiner_signature": {"x": rational_value(&geometric.x), "y": rational_value(&geometric.y)},
        "map_image": {"x": rational_value(&formula.x), "y": rational_value(&formula.y)},
        "match": agree,
    }));
    if agree {
        Ok(())
    } else {
        Err(Failure::verification(
            "geometric Steiner signature disagrees with the map formula",
        ))
    }
}

// ---------------------------------------------------------------------------
// iterate / preimage
// ---------------------------------------------------------------------------

fn iterate_generic<F: Field>(
    start: SigPoint<F>,
    steps: usize,
    fmt: &dyn Fn(&F) -> Value,
) -> Result<(), Failure> {
    let orb = orbit(&start, steps);
    for (i, z) in orb.steps.iter().enumerate() {
        println_json(&json!({
            "step": i,
            "x": fmt(&z.x),
            "y": fmt(&z.y),
            "stratum": stratum(z).label(),
        }));
    }
    match orb.hit_diagonal_at {
        Some(0) => Err(Failure::domain(
            "the map is undefined at the starting point (x = y)",
        )),
        Some(k) => {
            println_json(&json!({"stopped_at": k, "reason": "W1"}));
            Ok(())
        }
        None => Ok(()),
    }
}

fn cmd_iterate(field: &str, x: &str, y: &str, steps: usize) -> Result<(), Failure> {
    match parse_field(field)? {
        FieldChoice::Rational => {
            let z = SigPoint::new(parse_rational(x)?, parse_rational(y)?);
            iterate_generic(z, steps, &rational_value)
        }
        FieldChoice::Prime(p) => {
            let z = SigPoint::new(parse_fp(p, x)?, parse_fp(p, y)?);
            iterate_generic(z, steps, &fp_value)
        }
        FieldChoice::Real => {
            let z = SigPoint::new(parse_real(x)?, parse_real(y)?);
            iterate_generic(z, steps, &|v: &f64| json!(v))
        }
    }
}

fn preimage_generic<F: Field>(
    target: SigPoint<F>,
    tol: Tol,
    fmt: &dyn Fn(&F) -> Value,
) -> Result<(), Failure> {
    let fiber = preimages(&target, tol);
    println_json(&json!({
        "target": {"x": fmt(&target.x), "y": fmt(&target.y)},
        "count": fiber.points.len(),
        "points": fiber
            .points
            .iter()
            .map(|z| json!({"x": fmt(&z.x), "y": fmt(&z.y)}))
            .collect::<Vec<_>>(),
        "ramified": fiber.ramified,
        "diagnostic": fiber.diagnostic,
    }));
    Ok(())
}

fn cmd_preimage(field: &str, x: &str, y: &str, tol: f64) -> Result<(), Failure> {
    let tol = Tol(tol);
    match parse_field(field)? {
        FieldChoice::Rational => preimage_generic(
            SigPoint::new(parse_rational(x)?, parse_rational(y)?),
            tol,
            &rational_value,
        ),
        FieldChoice::Prime(p) => preimage_generic(
            SigPoint::new(parse_fp(p, x)?, parse_fp(p, y)?),
            tol,
            &fp_value,
        ),
        FieldChoice::Real => preimage_generic(
            SigPoint::new(parse_real(x)?, parse_real(y)?),
            tol,
            &|v: &f64| json!(v),
        ),
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn emit_report(report: &VerifyReport) -> Result<(), Failure> {
    for rec in &report.records {
        println_json(&json!({
            "trial": rec.index,
            "params": rec.params,
            "ok": rec.ok,
            "detail": rec.detail,
        }));
    }
    println_json(&json!({
        "target": report.target,
        "trials": report.records.len(),
        "skipped": report.skipped,
        "passed": report.all_ok(),
    }));
    if report.all_ok() {
        Ok(())
    } else {
        let first = report.first_failure().expect("failure present");
        Err(Failure::verification(format!(
            "first counterexample at trial {} ({}): {}",
            first.index,
            first.params,
            first.detail.clone().unwrap_or_default()
        )))
    }
}

fn cmd_verify(target: VerifyTarget, trials: usize, seed: u64) -> Result<(), Failure> {
    match target {
        VerifyTarget::Pappus => emit_report(&verify_pappus(trials, seed)),
        VerifyTarget::Steiner => emit_report(&verify_steiner(trials, seed)),
        VerifyTarget::Leisenring => emit_report(&verify_leisenring(trials, seed)),
        VerifyTarget::Harmonic => emit_report(&verify_rigby_harmonic(trials, seed)),
        VerifyTarget::Circ => emit_report(&verify_circ_conjugation(trials, seed)),
        VerifyTarget::Symmetries => emit_report(&verify_signature_symmetries(trials, seed)),
        VerifyTarget::Involution => emit_report(&verify_involution(trials, seed)),
        VerifyTarget::Conics => {
            let report =
                verify_two_conics(trials, seed).map_err(|e| Failure::config(e.to_string()))?;
            let passed = report.all_ok();
            println_json(&json!({
                "target": "conics",
                "trials": report.trials,
                "tau_identity_failures": report.tau_identity_failures,
                "map_identity_failures": report.map_identity_failures,
                "image_label_failures": report.image_label_failures,
                "iota_matrix_identity": report.iota_matrix_identity,
                "unique_label": report.unique_label.to_string(),
                "non_invariant_labels": report
                    .non_invariant_labels
                    .iter()
                    .map(|q| q.to_string())
                    .collect::<Vec<_>>(),
                "passed": passed,
            }));
            if passed {
                Ok(())
            } else {
                Err(Failure::verification("two-conics verification failed"))
            }
        }
        VerifyTarget::Alpha => {
            let report =
                pappus_steiner::dynamics::alpha_dynamics_checks(trials.max(1000), 1000, seed);
            let passed = report.all_ok();
            println_json(&json!({
                "target": "alpha",
                "tchebychev_conjugacy_exact": report.tchebychev_conjugacy_exact,
                "origin_superattracting": report.origin_superattracting,
                "other_fixed_points_repelling": report.other_fixed_points_repelling,
                "invariance_samples": report.invariance_samples,
                "invariance_failures": report.invariance_failures,
                "basin_samples": report.basin_samples,
                "basin_failures": report.basin_failures,
                "passed": passed,
            }));
            if passed {
                Ok(())
            } else {
                Err(Failure::verification("alpha dynamics verification failed"))
            }
        }
        VerifyTarget::Beta => {
            let report =
                pappus_steiner::dynamics::beta_dynamics_checks(trials.max(200), 1000, seed)
                    .map_err(|e| Failure::config(e.to_string()))?;
            let passed = report.all_ok();
            println_json(&json!({
                "target": "beta",
                "fixed_point_a": report.fixed_point_a,
                "fixed_point_b": report.fixed_point_b,
                "multiplier_a": report.multiplier_a,
                "multiplier_b": report.multiplier_b,
                "multiplier_c": report.multiplier_c,
                "critical_point_residuals": report.critical_point_residuals,
                "convergence_fraction": report.convergence_fraction,
                "conic_process_limit": [report.conic_process_limit.0, report.conic_process_limit.1],
                "conic_process_residual": report.conic_process_residual,
                "passed": passed,
            }));
            if passed {
                Ok(())
            } else {
                Err(Failure::verification("beta dynamics verification failed"))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

fn cmd_census(
    from: u64,
    to: u64,
    period: u32,
    format: CensusFormat,
    out: Option<PathBuf>,
    exempt: Vec<u64>,
    budget: u64,
) -> Result<(), Failure> {
    if !matches!(period, 3 | 4) {
        return Err(Failure::config(format!(
            "unsupported period {period} (expected 3 or 4)"
        )));
    }
    let config = CensusConfig {
        extra_exempt: exempt,
        budget,
    };
    let primes = primes_in_range(from, to);
    let needed: u64 = primes.iter().map(|&p| p * p).sum();
    if needed > config.budget {
        return Err(Failure::config(format!(
            "census over {} primes needs ~{needed} map steps, budget is {}",
            primes.len(),
            config.budget
        )));
    }
    let started = Instant::now();
    let reports: Vec<CycleReport> = primes
        .par_iter()
        .map(|&p| {
            census_prime(Prime::new(p).expect("sieved prime"), period, &config)
                .expect("period validated above")
        })
        .collect();
    let elapsed = started.elapsed();

    let table: String = match format {
        CensusFormat::Csv => {
            let mut buf = Vec::new();
            output::write_census_csv(&reports, &mut buf)?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
        CensusFormat::Json => {
            let mut lines = String::new();
            for r in &reports {
                let witness: Option<Vec<[u64; 2]>> = r
                    .witness
                    .as_ref()
                    .map(|c| c.iter().map(|z| [z.x.residue(), z.y.residue()]).collect());
                lines.push_str(
                    &json!({
                        "p": r.p,
                        "n": r.period,
                        "exists": r.exists,
                        "predicted": r.predicted,
                        "agrees": r.agrees,
                        "exempt": r.exempt,
                        "witness": witness,
                    })
                    .to_string(),
                );
                lines.push('\n');
            }
            lines
        }
    };
    match &out {
        Some(path) => std::fs::write(path, table)
            .map_err(|e| Failure::config(format!("writing {}: {e}", path.display())))?,
        None => print!("{table}"),
    }

    let agree = reports.iter().filter(|r| r.agrees && !r.exempt).count();
    let exempt_n = reports.iter().filter(|r| r.exempt).count();
    let disagree: Vec<u64> = reports
        .iter()
        .filter(|r| !r.agrees && !r.exempt)
        .map(|r| r.p)
        .collect();
    println!(
        "summary: period={period} primes={} agree={agree} exempt={exempt_n} disagree={} elapsed={elapsed:?}",
        reports.len(),
        disagree.len()
    );
    if disagree.is_empty() {
        Ok(())
    } else {
        Err(Failure::verification(format!(
            "non-exempt disagreements at primes {disagree:?}"
        )))
    }
}

// ---------------------------------------------------------------------------
// raster
// ---------------------------------------------------------------------------

fn cmd_raster(
    region: Region,
    width: usize,
    height: usize,
    params: &OrbitParams,
    budget: usize,
    out: &std::path::Path,
    csv: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let grid = raster(region, width, height, params, budget).map_err(|e| match e {
        CoreError::BudgetExceeded { .. } => Failure::config(e.to_string()),
        other => Failure::domain(other.to_string()),
    })?;
    output::write_pgm(&grid, out)?;
    if let Some(path) = csv {
        output::write_raster_csv(&grid, path)?;
    }
    let mut counts = std::collections::BTreeMap::new();
    for cell in &grid.cells {
        *counts.entry(cell.label.label()).or_insert(0usize) += 1;
    }
    println_json(&json!({
        "width": width,
        "height": height,
        "region": [region.xmin, region.xmax, region.ymin, region.ymax],
        "counts": counts,
        "out": out.display().to_string(),
    }));
    Ok(())
}
