//! Command-line front end: `plane`, `conic` and `formula`.
//!
//! [`run`] does all the work and hands back the text to print and the exit
//! status, so the binary is a two-line wrapper and tests can drive the CLI
//! in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bott::{conic_closed_formula, conic_report, BottError, BottReport};
use crate::conic_space::dump_fixed_points;
use crate::exact::Fraction;
use crate::grassmann::{check_plane_parameters, hyperplane_degree_closed, plane_report};
use crate::interpolate::{
    extract_small_roots, sample_and_interpolate, FitStatus, InterpolationError, SampleCache,
    SampleFamily,
};
use crate::weights::{
    random_valid_weights, validate_conic_weights, validate_distinct_weights, WeightVector,
};

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const INCONSISTENT: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DEGENERATE: i32 = 3;
    pub const NEEDS_MORE_SAMPLES: i32 = 4;
}

/// Integer roots searched for when factoring an interpolated formula.
const ROOT_BOUND: i64 = 20;

/// Degree formulas for P^3 that are printed for reference only.
pub const REFERENCE_FORMULAS: &str = "\
Reference formulas (printed only; nothing in this tool computes them)

Foliations of degree d on P^3 with an invariant smooth conic:
  degree = 4/(8! * 3^2) * (d-1) * d * (207d^14 + 2763d^13 + 15447d^12 + 54395d^11
           + 114847d^10 + 207891d^9 + 256737d^8 + 225801d^7 + 164937d^6
           + 182101d^5 + 38993d^4 + 316221d^3 + 248856d^2 - 118908d - 332640)
  codimension = 4(d-1)

Foliations of degree d on P^3 with an invariant quadric surface:
  degree = 1/(9! * (3!)^9) * (d-1) * d * (d+1) * (d^24 + 81d^23 + 3151d^22
           + 77949d^21 + 1369333d^20 + 18084843d^19 + 185031133d^18
           + 1481854743d^17 + 9251138050d^16 + 44737976160d^15
           + 168507293704d^14 + 503603726976d^13 + 1212870415960d^12
           + 2353394912904d^11 + 3628929239056d^10 + 4249158105672d^9
           + 3232639214668d^8 + 413912636928d^7 - 2874493287072d^6
           - 3885321416832d^5 - 1115680433472d^4 + 4477695012864d^3
           + 8264265366528d^2 + 8139069775872d + 4334215495680)
  codimension = (d-1)(d+5)
";

#[derive(Debug, Parser)]
#[command(
    name = "foliation-degrees",
    version,
    about = "Degrees of spaces of foliations with invariant planes or conics, by Bott's formula",
    arg_required_else_help = true
)]
pub struct Cli {
    /// Print the P^3 conic and quadric degree formulas and exit.
    #[arg(long, global = true)]
    pub show_reference_formulas: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Foliations on P^n with an invariant k-plane.
    Plane(PlaneArgs),
    /// Foliations on P^2 with an invariant smooth conic.
    Conic(ConicArgs),
    /// Sample degrees over a range of d and interpolate the formula.
    Formula(FormulaArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Torus weights as a comma-separated list, e.g. 0,1,3.
    #[arg(long, allow_hyphen_values = true)]
    pub weights: Option<WeightVector>,
    /// Seed for re-randomizing degenerate weights.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Emit a JSON report.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct PlaneArgs {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'd')]
    pub d: u32,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct ConicArgs {
    #[arg(short = 'd')]
    pub d: u32,
    /// Also list every fixed point with its tangent and fiber weights.
    #[arg(long)]
    pub dump_fixed_points: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Conic,
    Plane,
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Ambient dimension (plane family).
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Plane dimension (plane family).
    #[arg(short = 'k')]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub d_min: u32,
    #[arg(long, default_value_t = 17)]
    pub d_max: u32,
    /// JSON file of cached sample values.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Report how many Bott sums were evaluated and how many were cached.
    #[arg(long)]
    pub stats: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: exit::SUCCESS }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: message.into(), code }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(exit::USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    if cli.show_reference_formulas {
        return Outcome::ok(REFERENCE_FORMULAS.to_string());
    }
    match cli.command {
        Some(Command::Plane(args)) => cmd_plane(&args),
        Some(Command::Conic(args)) => cmd_conic(&args),
        Some(Command::Formula(args)) => cmd_formula(&args),
        None => Outcome::fail(exit::USAGE, "no subcommand given; see --help\n"),
    }
}

fn exit_code(err: &BottError) -> i32 {
    match err {
        BottError::DegenerateWeights { .. } => exit::DEGENERATE,
        BottError::InvalidParameters(_) | BottError::Weights(_) => exit::USAGE,
        BottError::TangentCount { .. } | BottError::LocalizationInconsistency { .. } => {
            exit::INCONSISTENT
        }
    }
}

fn bott_failure(err: &BottError) -> Outcome {
    let mut message = format!("error: {err}\n");
    if let BottError::LocalizationInconsistency { contributions, .. } = err {
        for c in contributions {
            let _ = writeln!(message, "  {}: {}", c.label, c.contribution);
        }
    }
    Outcome::fail(exit_code(err), message)
}

/// Runs `f` with the given weights. A degenerate-weights failure triggers one
/// retry with seeded random weights; a second one is returned as is.
fn with_weight_retry<T, V, F>(
    initial: WeightVector,
    n: usize,
    validator: V,
    seed: u64,
    f: F,
) -> Result<(T, WeightVector, Option<String>), BottError>
where
    V: Fn(&WeightVector) -> bool,
    F: Fn(&WeightVector) -> Result<T, BottError>,
{
    match f(&initial) {
        Err(err) if err.is_degenerate() => {
            let fresh = random_valid_weights(n, validator, seed)?;
            let note = format!("{err}; retried with weights {fresh}");
            f(&fresh).map(|value| (value, fresh, Some(note)))
        }
        other => other.map(|value| (value, initial, None)),
    }
}

fn contributions_json(report: &BottReport) -> Value {
    report
        .contributions
        .iter()
        .map(|c| json!({ "label": c.label, "contribution": c.contribution.to_ratio_string() }))
        .collect()
}

fn weights_json(w: &WeightVector) -> Value {
    w.as_slice().iter().map(|x| Value::String(x.to_string())).collect()
}

fn match_word(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

/// A second weight vector for the self-check, different from `w`.
fn alternate_weights<V>(w: &WeightVector, n: usize, validator: V, seed: u64) -> Result<WeightVector, BottError>
where
    V: Fn(&WeightVector) -> bool + Copy,
{
    let mut s = seed.wrapping_add(1);
    loop {
        let candidate = random_valid_weights(n, validator, s)?;
        if &candidate != w {
            return Ok(candidate);
        }
        s = s.wrapping_add(1);
    }
}

pub fn cmd_plane(args: &PlaneArgs) -> Outcome {
    let (n, k, d) = (args.n, args.k, args.d);
    if let Err(e) = check_plane_parameters(k, n) {
        return Outcome::fail(exit::USAGE, format!("error: {e}\n"));
    }
    if d == 0 {
        return Outcome::fail(exit::USAGE, "error: d must be at least 1\n");
    }
    let initial = args
        .common
        .weights
        .clone()
        .unwrap_or_else(|| WeightVector::default_grassmann(n));
    if initial.len() != n + 1 {
        return Outcome::fail(
            exit::USAGE,
            format!("error: expected {} weights for P^{n}, got {}\n", n + 1, initial.len()),
        );
    }
    let seed = args.common.seed;
    let run = |w: &WeightVector| plane_report(k, n, d, w);
    let (report, weights, note) =
        match with_weight_retry(initial, n, validate_distinct_weights, seed, run) {
            Ok(r) => r,
            Err(e) => return bott_failure(&e),
        };

    let check_weights = match alternate_weights(&weights, n, validate_distinct_weights, seed) {
        Ok(w) => w,
        Err(e) => return bott_failure(&e),
    };
    let check_degree = match plane_report(k, n, d, &check_weights) {
        Ok(r) => r.degree,
        Err(e) => return bott_failure(&e),
    };
    let weights_agree = check_degree == report.degree;
    let closed = (k + 1 == n).then(|| hyperplane_degree_closed(n, d));
    let closed_agree = closed.as_ref().is_none_or(|c| c == &report.degree);

    let mut notes: Vec<String> = note.into_iter().collect();
    if d == 1 {
        notes.push("d = 1 lies outside the generically injective regime (d >= 2)".into());
    }

    let stdout = if args.common.json {
        let value = json!({
            "family": "plane",
            "n": n.to_string(),
            "k": k.to_string(),
            "d": d.to_string(),
            "weights": weights_json(&weights),
            "degree": report.degree.to_string(),
            "codimension": report.codimension.to_string(),
            "ambient_dimension": report.ambient_dimension.to_string(),
            "closed_form": closed.as_ref().map(|c| json!({
                "value": c.to_string(),
                "matches": closed_agree,
            })),
            "weight_check": {
                "weights": weights_json(&check_weights),
                "degree": check_degree.to_string(),
                "matches": weights_agree,
            },
            "contributions": contributions_json(&report),
            "notes": notes,
        });
        serde_json::to_string_pretty(&value).expect("serializable") + "\n"
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "foliations of degree {d} on P^{n} with an invariant {k}-plane");
        let _ = writeln!(out, "weights: {weights}");
        let _ = writeln!(out, "degree: {}", report.degree);
        let _ = writeln!(out, "codimension: {}", report.codimension);
        let _ = writeln!(out, "ambient dimension N: {}", report.ambient_dimension);
        if let Some(c) = &closed {
            let _ = writeln!(out, "closed form C(C(d+n,n),n): {c} ({})", match_word(closed_agree));
        }
        let _ = writeln!(
            out,
            "weight check with {check_weights}: {check_degree} ({})",
            match_word(weights_agree)
        );
        for note in &notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    };

    let code = if weights_agree && closed_agree { exit::SUCCESS } else { exit::INCONSISTENT };
    Outcome { stdout, stderr: String::new(), code }
}

pub fn cmd_conic(args: &ConicArgs) -> Outcome {
    let d = args.d;
    if d < 2 {
        return Outcome::fail(exit::USAGE, format!("error: the conic family needs d >= 2, got {d}\n"));
    }
    let initial = args.common.weights.clone().unwrap_or_else(WeightVector::default_conic);
    if initial.len() != 3 {
        return Outcome::fail(
            exit::USAGE,
            format!("error: expected 3 weights, got {}\n", initial.len()),
        );
    }
    let run = |w: &WeightVector| conic_report(d, w);
    let (report, weights, note) =
        match with_weight_retry(initial, 2, validate_conic_weights, args.common.seed, run) {
            Ok(r) => r,
            Err(e) => return bott_failure(&e),
        };
    let closed = conic_closed_formula()
        .eval(&Fraction::from(d as i64))
        .to_integer()
        .expect("the closed formula is integer valued");
    let agree = closed == report.degree;
    let fixed_points = if args.dump_fixed_points {
        match dump_fixed_points(d, &weights) {
            Ok(points) => Some(points),
            Err(e) => return bott_failure(&e),
        }
    } else {
        None
    };

    let stdout = if args.common.json {
        let mut value = json!({
            "family": "conic",
            "n": "2",
            "d": d.to_string(),
            "weights": weights_json(&weights),
            "degree": report.degree.to_string(),
            "codimension": report.codimension.to_string(),
            "ambient_dimension": report.ambient_dimension.to_string(),
            "closed_form": { "value": closed.to_string(), "matches": agree },
            "contributions": contributions_json(&report),
            "notes": note.iter().collect::<Vec<_>>(),
        });
        if let Some(points) = &fixed_points {
            value["fixed_points"] = serde_json::to_value(points).expect("serializable");
        }
        serde_json::to_string_pretty(&value).expect("serializable") + "\n"
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "foliations of degree {d} on P^2 with an invariant smooth conic");
        let _ = writeln!(out, "weights: {weights}");
        let _ = writeln!(out, "degree: {}", report.degree);
        let _ = writeln!(out, "codimension: {}", report.codimension);
        let _ = writeln!(out, "ambient dimension N: {}", report.ambient_dimension);
        let _ = writeln!(out, "closed formula: {closed} ({})", match_word(agree));
        if let Some(note) = &note {
            let _ = writeln!(out, "note: {note}");
        }
        if let Some(points) = &fixed_points {
            for p in points {
                let _ = writeln!(out, "{}", p.label);
                let _ = writeln!(out, "  tangent: {:?}", p.tangent_weights);
                let _ = writeln!(out, "  fiber:   {:?}", p.fiber_weights);
            }
        }
        out
    };
    let code = if agree { exit::SUCCESS } else { exit::INCONSISTENT };
    Outcome { stdout, stderr: String::new(), code }
}

pub fn cmd_formula(args: &FormulaArgs) -> Outcome {
    let (family, n, validator): (SampleFamily, usize, fn(&WeightVector) -> bool) = match args.family {
        FamilyArg::Conic => (SampleFamily::Conic, 2, validate_conic_weights),
        FamilyArg::Plane => {
            let (Some(n), Some(k)) = (args.n, args.k) else {
                return Outcome::fail(exit::USAGE, "error: --family plane needs -n and -k\n");
            };
            if let Err(e) = check_plane_parameters(k, n) {
                return Outcome::fail(exit::USAGE, format!("error: {e}\n"));
            }
            (SampleFamily::Plane { k, n }, n, validate_distinct_weights)
        }
    };
    let min_d = if family == SampleFamily::Conic { 2 } else { 1 };
    if args.d_min < min_d || args.d_max < args.d_min || args.d_max - args.d_min < 1 {
        return Outcome::fail(
            exit::USAGE,
            format!(
                "error: need d_min >= {min_d} and at least two samples (got {}..{})\n",
                args.d_min, args.d_max
            ),
        );
    }
    let initial = args.common.weights.clone().unwrap_or_else(|| match family {
        SampleFamily::Conic => WeightVector::default_conic(),
        SampleFamily::Plane { n, .. } => WeightVector::default_grassmann(n),
    });
    if initial.len() != n + 1 {
        return Outcome::fail(
            exit::USAGE,
            format!("error: expected {} weights, got {}\n", n + 1, initial.len()),
        );
    }

    let mut stderr = String::new();
    let mut cache = match &args.cache {
        Some(path) => {
            let (cache, warning) = SampleCache::open(path);
            if let Some(w) = warning {
                let _ = writeln!(stderr, "warning: {w}");
            }
            cache
        }
        None => SampleCache::in_memory(),
    };

    let attempt = |w: &WeightVector, cache: &mut SampleCache| {
        sample_and_interpolate(family, args.d_min, args.d_max, w, cache)
    };
    let result = match attempt(&initial, &mut cache) {
        Err(InterpolationError::Bott(e)) if e.is_degenerate() => {
            match random_valid_weights(n, validator, args.common.seed) {
                Ok(fresh) => {
                    let _ = writeln!(stderr, "note: {e}; retried with weights {fresh}");
                    attempt(&fresh, &mut cache).map(|r| (r, fresh))
                }
                Err(err) => Err(InterpolationError::Bott(err.into())),
            }
        }
        other => other.map(|r| (r, initial.clone())),
    };
    let ((fit, samples), weights) = match result {
        Ok(r) => r,
        Err(InterpolationError::Bott(e)) => {
            let mut out = bott_failure(&e);
            out.stderr = stderr + &out.stderr;
            return out;
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return Outcome { stdout: String::new(), stderr, code: exit::INCONSISTENT };
        }
    };
    if let Err(e) = cache.save() {
        let _ = writeln!(stderr, "warning: could not write cache: {e}");
    }

    let factored = extract_small_roots(&fit.poly, ROOT_BOUND).ok();
    let reference = match family {
        SampleFamily::Conic => Some(fit.poly == conic_closed_formula()),
        SampleFamily::Plane { k, n } if k + 1 == n => Some(
            (args.d_max + 1..=args.d_max + 4).all(|d| {
                fit.poly.eval(&Fraction::from(d as i64)) == Fraction::from(hyperplane_degree_closed(n, d))
            }),
        ),
        SampleFamily::Plane { .. } => None,
    };
    let confirmed = fit.is_confirmed();

    let stdout = if args.common.json {
        let value = json!({
            "family": family.tag(),
            "d_min": args.d_min.to_string(),
            "d_max": args.d_max.to_string(),
            "weights": weights_json(&weights),
            "status": match fit.status {
                FitStatus::Confirmed { .. } => "confirmed",
                FitStatus::NeedsMoreSamples => "needs_more_samples",
            },
            "degree_in_d": fit.poly.degree().map(|x| x.to_string()),
            "coefficients": fit.poly.coeffs().iter().map(Fraction::to_ratio_string).collect::<Vec<_>>(),
            "expanded": fit.poly.to_string(),
            "factored": factored.as_ref().map(|f| f.to_string()),
            "roots": factored.as_ref().map(|f| f.roots.iter()
                .map(|(r, m)| json!({ "root": r.to_string(), "multiplicity": m.to_string() }))
                .collect::<Vec<_>>()),
            "matches_reference": reference,
            "samples": samples.samples.iter()
                .map(|(d, v)| json!({ "d": d.to_string(), "value": v.to_string() }))
                .collect::<Vec<_>>(),
            "stats": { "computed": samples.computed.to_string(), "cached": samples.cached.to_string() },
        });
        serde_json::to_string_pretty(&value).expect("serializable") + "\n"
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "family: {}  d = {}..{}  weights: {weights}", family.tag(), args.d_min, args.d_max);
        match fit.status {
            FitStatus::Confirmed { prefix } => {
                let _ = writeln!(out, "status: confirmed (fit from the first {prefix} of {} samples)", samples.samples.len());
            }
            FitStatus::NeedsMoreSamples => {
                let _ = writeln!(out, "status: needs more samples (interpolant has degree {} = samples - 1)", samples.samples.len() - 1);
            }
        }
        let _ = writeln!(out, "expanded: {}", fit.poly);
        if let Some(f) = &factored {
            let _ = writeln!(out, "factored: {f}");
        }
        if let Some(m) = reference {
            let _ = writeln!(out, "reference formula: {}", match_word(m));
        }
        if args.stats {
            let _ = writeln!(out, "bott evaluations: {}  cached samples: {}", samples.computed, samples.cached);
        }
        out
    };
    let code = if !confirmed {
        exit::NEEDS_MORE_SAMPLES
    } else if reference == Some(false) {
        exit::INCONSISTENT
    } else {
        exit::SUCCESS
    };
    Outcome { stdout, stderr, code }
}

/// Parses a decimal-string integer field from a JSON report.
pub fn json_integer(value: &Value, field: &str) -> Option<BigInt> {
    value.get(field)?.as_str()?.parse().ok()
}
