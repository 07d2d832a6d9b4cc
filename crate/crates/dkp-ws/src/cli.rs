//! Command-line front end over the solver library.
//!
//! Six subcommands cover the artifact kinds the library computes:
//! `transmission` and `spectrum` emit CSV tables, `critical` a single
//! JSON record, `algebra-check` a pass report, `hyp2f1-eval` one
//! special-function value, and `potential-profile` the well shape
//! itself. Every CSV artifact opens with its resolved configuration as
//! `# key=value` comment lines, and `--config` accepts exactly that
//! format, so a produced file can be fed back to reproduce itself.
//!
//! Exit codes: 0 on success, 1 for usage or configuration problems,
//! 2 for domain errors, with a one-line `error: <code>: <detail>`
//! reason on standard error.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::algebra::{build_betas, verify_algebra, Spin};
use crate::bound::{self, BoundState, CriticalMethod, DEFAULT_BOUND_GRID};
use crate::hyp2f1::{hyp2f1, Hyp2F1Args};
use crate::scattering::{self, PhysicalSetup, SweepVariable, DEFAULT_OFFSET_REL};
use crate::square_well::SquareWell;
use crate::{Error, Result};

/// Default number of sweep intervals.
pub const DEFAULT_SWEEP_STEPS: usize = 1000;
/// Default number of depth intervals when tracking a spectrum.
pub const DEFAULT_TRACK_STEPS: usize = 100;
/// Default number of sample intervals for the potential profile.
pub const DEFAULT_PROFILE_STEPS: usize = 500;

#[derive(Parser, Debug)]
#[command(
    name = "dkp-ws",
    version,
    about = "Scattering and bound states of DKP particles in a one-dimensional Woods-Saxon well"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Sweep reflection and transmission over energy or depth (CSV)
    #[command(name = "transmission")]
    Transmission(TransmissionArgs),
    /// Bound spectrum at one depth, or tracked across depths (CSV)
    #[command(name = "spectrum")]
    Spectrum(SpectrumArgs),
    /// Critical-depth search inside a bracket (JSON record)
    #[command(name = "critical")]
    Critical(CriticalArgs),
    /// Exact check of the trilinear beta-matrix algebra
    #[command(name = "algebra-check")]
    AlgebraCheck(AlgebraCheckArgs),
    /// One Gauss hypergeometric value (CSV row)
    #[command(name = "hyp2f1-eval")]
    Hyp2f1Eval(Hyp2f1EvalArgs),
    /// Samples of the Woods-Saxon well shape (CSV)
    #[command(name = "potential-profile")]
    PotentialProfile(PotentialProfileArgs),
}

#[derive(Args, Debug)]
struct TransmissionArgs {
    /// Particle mass m, the energy unit
    #[arg(long)]
    m: Option<f64>,
    /// Well half-width a
    #[arg(long)]
    a: Option<f64>,
    /// Edge thickness r
    #[arg(long)]
    r: Option<f64>,
    /// Fixed probe energy E, required for a depth sweep
    #[arg(long = "E", allow_hyphen_values = true)]
    e: Option<f64>,
    /// Fixed well depth eV0, required for an energy sweep
    #[arg(long)]
    ev0: Option<f64>,
    /// Swept variable: ev0 or e
    #[arg(long)]
    sweep: Option<String>,
    /// Sweep range lo:hi
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    /// Number of sweep intervals
    #[arg(long)]
    steps: Option<usize>,
    /// Threshold exclusion half-width relative to m
    #[arg(long)]
    offset: Option<f64>,
    /// Append an oracle column; the only oracle is square-well
    #[arg(long)]
    oracle: Option<String>,
    /// key=value file; flags override file values
    #[arg(long)]
    config: Option<String>,
    /// Output path, standard output when absent
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    /// Particle mass m, the energy unit
    #[arg(long)]
    m: Option<f64>,
    /// Well half-width a
    #[arg(long)]
    a: Option<f64>,
    /// Edge thickness r
    #[arg(long)]
    r: Option<f64>,
    /// Well depth eV0 for a single-depth spectrum
    #[arg(long)]
    ev0: Option<f64>,
    /// Depth range lo:hi; selects tracking instead of a single depth
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    /// Number of depth intervals when tracking
    #[arg(long)]
    steps: Option<usize>,
    /// Number of energy scan nodes
    #[arg(long)]
    grid: Option<usize>,
    /// Threshold exclusion half-width relative to m
    #[arg(long)]
    offset: Option<f64>,
    /// Append an oracle column; the only oracle is square-well
    #[arg(long)]
    oracle: Option<String>,
    /// key=value file; flags override file values
    #[arg(long)]
    config: Option<String>,
    /// Output path, standard output when absent
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct CriticalArgs {
    /// Particle mass m, the energy unit
    #[arg(long)]
    m: Option<f64>,
    /// Well half-width a
    #[arg(long)]
    a: Option<f64>,
    /// Edge thickness r
    #[arg(long)]
    r: Option<f64>,
    /// Depth bracket lo:hi to search
    #[arg(long, allow_hyphen_values = true)]
    bracket: Option<String>,
    /// Transition to locate: count-drop or root-merge
    #[arg(long)]
    method: Option<String>,
    /// key=value file; flags override file values
    #[arg(long)]
    config: Option<String>,
    /// Output path, standard output when absent
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct AlgebraCheckArgs {
    /// Representation to check: 0, 1, or both
    #[arg(long)]
    spin: Option<String>,
    /// key=value file; flags override file values
    #[arg(long)]
    config: Option<String>,
    /// Output path, standard output when absent
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct Hyp2f1EvalArgs {
    /// Upper parameter alpha, as re or re,im
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Upper parameter beta, as re or re,im
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Lower parameter gamma, as re or re,im
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Argument z, as re or re,im
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// key=value file; flags override file values
    #[arg(long)]
    config: Option<String>,
    /// Output path, standard output when absent
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct PotentialProfileArgs {
    /// Well half-width a
    #[arg(long)]
    a: Option<f64>,
    /// Edge thickness r
    #[arg(long)]
    r: Option<f64>,
    /// Well depth eV0
    #[arg(long)]
    ev0: Option<f64>,
    /// Sample range lo:hi, default -3a:3a
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    /// Number of sample intervals
    #[arg(long)]
    steps: Option<usize>,
    /// key=value file; flags override file values
    #[arg(long)]
    config: Option<String>,
    /// Output path, standard output when absent
    #[arg(long)]
    out: Option<String>,
}

/// Parses the arguments, runs the selected command, and maps the
/// outcome onto the exit-code contract.
pub fn main() -> ExitCode {
    match Cli::try_parse() {
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1,
            };
            let _ = e.print();
            ExitCode::from(code)
        }
        Ok(cli) => match run(cli) {
            Ok(()) => ExitCode::SUCCESS,
            Err(err) => {
                eprintln!("error: {}: {}", error_code(&err), err);
                let code = if matches!(err, Error::Config(_)) { 1u8 } else { 2 };
                ExitCode::from(code)
            }
        },
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Cmd::Transmission(a) => run_transmission(a),
        Cmd::Spectrum(a) => run_spectrum(a),
        Cmd::Critical(a) => run_critical(a),
        Cmd::AlgebraCheck(a) => run_algebra_check(a),
        Cmd::Hyp2f1Eval(a) => run_hyp2f1_eval(a),
        Cmd::PotentialProfile(a) => run_potential_profile(a),
    }
}

/// Stable machine-readable token for each error kind, printed before
/// the human-readable detail on standard error.
fn error_code(e: &Error) -> &'static str {
    match e {
        Error::GammaPole { .. } => "gamma-pole",
        Error::BadGammaParameter { .. } => "bad-gamma-parameter",
        Error::SeriesStalled { .. } => "series-stalled",
        Error::UnsupportedArgument { .. } => "unsupported-argument",
        Error::DegenerateConnection { .. } => "degenerate-connection",
        Error::Amplitude { .. } => "amplitude",
        Error::AmplitudePole { .. } => "amplitude-pole",
        Error::ThresholdEnergy => "threshold-energy",
        Error::NudgeExhausted { .. } => "nudge-exhausted",
        Error::WrongRegime { .. } => "wrong-regime",
        Error::InvalidSetup(_) => "invalid-setup",
        Error::NoCoalescence { .. } => "no-coalescence",
        Error::Config(_) => "config",
    }
}

/// Merged view of command-line flags and an optional key=value file.
/// Flags win; within the file the first occurrence of a key wins.
/// Lines may carry a leading `# `, and lines without `=` are ignored,
/// which makes every emitted artifact header a valid config file.
struct Resolver {
    values: HashMap<String, String>,
}

impl Resolver {
    fn load(path: Option<&str>) -> Result<Self> {
        let mut values = HashMap::new();
        if let Some(p) = path {
            let text = fs::read_to_string(p)
                .map_err(|e| Error::Config(format!("cannot read config {p}: {e}")))?;
            for raw in text.lines() {
                let line = raw.strip_prefix("# ").unwrap_or(raw).trim();
                if let Some((k, v)) = line.split_once('=') {
                    values
                        .entry(k.trim().to_string())
                        .or_insert_with(|| v.trim().to_string());
                }
            }
        }
        Ok(Resolver { values })
    }

    fn str_opt(&self, flag: Option<String>, key: &str) -> Option<String> {
        flag.or_else(|| self.values.get(key).cloned())
    }

    fn str_or(&self, flag: Option<String>, key: &str, default: &str) -> String {
        self.str_opt(flag, key)
            .unwrap_or_else(|| default.to_string())
    }

    fn str_req(&self, flag: Option<String>, key: &str) -> Result<String> {
        self.str_opt(flag, key)
            .ok_or_else(|| Error::Config(format!("missing required --{key}")))
    }

    fn f64_opt(&self, flag: Option<f64>, key: &str) -> Result<Option<f64>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            None => Ok(None),
            Some(s) => s
                .parse()
                .map(Some)
                .map_err(|_| Error::Config(format!("config value {key}={s} is not a number"))),
        }
    }

    fn f64_or(&self, flag: Option<f64>, key: &str, default: f64) -> Result<f64> {
        Ok(self.f64_opt(flag, key)?.unwrap_or(default))
    }

    fn f64_req(&self, flag: Option<f64>, key: &str) -> Result<f64> {
        self.f64_opt(flag, key)?
            .ok_or_else(|| Error::Config(format!("missing required --{key}")))
    }

    fn usize_or(&self, flag: Option<usize>, key: &str, default: usize) -> Result<usize> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.values.get(key) {
            None => Ok(default),
            Some(s) => s
                .parse()
                .map_err(|_| Error::Config(format!("config value {key}={s} is not a count"))),
        }
    }
}

fn parse_span(s: &str) -> Result<(f64, f64)> {
    let err = || Error::Config(format!("range must be lo:hi with numeric ends, got {s}"));
    let (lo, hi) = s.split_once(':').ok_or_else(err)?;
    let lo: f64 = lo.trim().parse().map_err(|_| err())?;
    let hi: f64 = hi.trim().parse().map_err(|_| err())?;
    Ok((lo, hi))
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let err = || Error::Config(format!("complex value must be re or re,im, got {s}"));
    match s.split_once(',') {
        None => Ok(Complex64::new(s.trim().parse().map_err(|_| err())?, 0.0)),
        Some((re, im)) => Ok(Complex64::new(
            re.trim().parse().map_err(|_| err())?,
            im.trim().parse().map_err(|_| err())?,
        )),
    }
}

fn parse_sweep(s: &str) -> Result<SweepVariable> {
    match s {
        "ev0" => Ok(SweepVariable::Depth),
        "e" | "E" => Ok(SweepVariable::Energy),
        _ => Err(Error::Config(format!("sweep must be ev0 or e, got {s}"))),
    }
}

fn sweep_token(v: SweepVariable) -> &'static str {
    match v {
        SweepVariable::Depth => "ev0",
        SweepVariable::Energy => "e",
    }
}

fn parse_method(s: &str) -> Result<CriticalMethod> {
    match s {
        "count-drop" => Ok(CriticalMethod::CountDrop),
        "root-merge" => Ok(CriticalMethod::RootMerge),
        _ => Err(Error::Config(format!(
            "method must be count-drop or root-merge, got {s}"
        ))),
    }
}

fn parse_oracle(s: Option<String>) -> Result<bool> {
    match s.as_deref() {
        None => Ok(false),
        Some("square-well") => Ok(true),
        Some(other) => Err(Error::Config(format!(
            "oracle must be square-well, got {other}"
        ))),
    }
}

/// 17 significant digits, enough to reproduce the binary value.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn num_opt(x: Option<f64>) -> String {
    match x {
        Some(v) => num(v),
        None => "NaN".to_string(),
    }
}

fn echo(text: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(text, "# {key}={value}");
}

fn write_artifact(path: Option<&str>, text: &str) -> Result<()> {
    match path {
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::Config(format!("cannot write to standard output: {e}"))),
        Some(p) => {
            fs::write(p, text).map_err(|e| Error::Config(format!("cannot write {p}: {e}")))
        }
    }
}

fn square_transmission(m: f64, a: f64, v0: f64, e: f64) -> f64 {
    SquareWell::new(m, a, v0)
        .and_then(|w| w.transmission(e))
        .unwrap_or(f64::NAN)
}

fn run_transmission(args: TransmissionArgs) -> Result<()> {
    let rz = Resolver::load(args.config.as_deref())?;
    let m = rz.f64_or(args.m, "m", 1.0)?;
    let a = rz.f64_req(args.a, "a")?;
    let r = rz.f64_req(args.r, "r")?;
    let offset = rz.f64_or(args.offset, "offset", DEFAULT_OFFSET_REL)?;
    let var = parse_sweep(&rz.str_or(args.sweep, "sweep", "ev0"))?;
    let (lo, hi) = parse_span(&rz.str_req(args.range, "range")?)?;
    let steps = rz.usize_or(args.steps, "steps", DEFAULT_SWEEP_STEPS)?;
    let oracle = parse_oracle(rz.str_opt(args.oracle, "oracle"))?;
    let out = rz.str_opt(args.out, "out");

    let mut template = PhysicalSetup::new(m, a, r, 0.0, 0.0);
    template.offset_rel = offset;
    match var {
        SweepVariable::Depth => template.e = rz.f64_req(args.e, "E")?,
        SweepVariable::Energy => template.ev0 = rz.f64_req(args.ev0, "ev0")?,
    }
    let table = scattering::sweep(&template, var, lo, hi, steps)?;

    let mut text = String::new();
    let _ = writeln!(text, "# dkp-ws transmission");
    echo(&mut text, "m", m);
    echo(&mut text, "a", a);
    echo(&mut text, "r", r);
    match var {
        SweepVariable::Depth => echo(&mut text, "E", template.e),
        SweepVariable::Energy => echo(&mut text, "ev0", template.ev0),
    }
    echo(&mut text, "sweep", sweep_token(var));
    echo(&mut text, "range", format_args!("{lo}:{hi}"));
    echo(&mut text, "steps", steps);
    echo(&mut text, "offset", offset);
    if oracle {
        echo(&mut text, "oracle", "square-well");
    }
    if let Some(o) = &out {
        echo(&mut text, "out", o);
    }
    let header = if oracle {
        "x,E,eV0,R,T,unitarity_residual,flags,T_square"
    } else {
        "x,E,eV0,R,T,unitarity_residual,flags"
    };
    let _ = writeln!(text, "{header}");
    for row in &table.rows {
        let flags: Vec<&str> = row.flags.iter().map(|f| f.token()).collect();
        let cell = if oracle {
            format!(",{}", num(square_transmission(m, a, row.ev0, row.e)))
        } else {
            String::new()
        };
        let _ = writeln!(
            text,
            "{},{},{},{},{},{},{}{}",
            num(row.x),
            num(row.e),
            num(row.ev0),
            num_opt(row.r_coef),
            num_opt(row.t_coef),
            num_opt(row.unitarity),
            flags.join(";"),
            cell
        );
    }
    write_artifact(out.as_deref(), &text)
}

fn square_levels(oracle: bool, m: f64, a: f64, v0: f64) -> Vec<f64> {
    if !oracle {
        return Vec::new();
    }
    SquareWell::new(m, a, v0)
        .map(|w| w.bound_energies())
        .unwrap_or_default()
}

fn spectrum_rows(text: &mut String, ev0: f64, states: &[BoundState], oracle: bool, sq: &[f64]) {
    for (i, st) in states.iter().enumerate() {
        let mut tokens = vec![st.parity.token()];
        tokens.extend(st.flags.iter().map(|f| f.token()));
        let cell = if oracle {
            format!(",{}", num_opt(sq.get(i).copied()))
        } else {
            String::new()
        };
        let _ = writeln!(
            text,
            "{},{},{},{},{}{}",
            num(ev0),
            i,
            num(st.e),
            num(st.residual),
            tokens.join(";"),
            cell
        );
    }
}

fn run_spectrum(args: SpectrumArgs) -> Result<()> {
    let rz = Resolver::load(args.config.as_deref())?;
    let m = rz.f64_or(args.m, "m", 1.0)?;
    let a = rz.f64_req(args.a, "a")?;
    let r = rz.f64_req(args.r, "r")?;
    let offset = rz.f64_or(args.offset, "offset", DEFAULT_OFFSET_REL)?;
    let grid = rz.usize_or(args.grid, "grid", DEFAULT_BOUND_GRID)?;
    let oracle = parse_oracle(rz.str_opt(args.oracle, "oracle"))?;
    let out = rz.str_opt(args.out, "out");
    let span = rz.str_opt(args.range, "range");

    let mut template = PhysicalSetup::new(m, a, r, 0.0, 0.0);
    template.offset_rel = offset;

    let mut text = String::new();
    let _ = writeln!(text, "# dkp-ws spectrum");
    echo(&mut text, "m", m);
    echo(&mut text, "a", a);
    echo(&mut text, "r", r);

    let header = if oracle {
        "eV0,root_index,E,residual,flags,E_square"
    } else {
        "eV0,root_index,E,residual,flags"
    };

    if let Some(span) = span {
        let (lo, hi) = parse_span(&span)?;
        let steps = rz.usize_or(args.steps, "steps", DEFAULT_TRACK_STEPS)?;
        echo(&mut text, "range", format_args!("{lo}:{hi}"));
        echo(&mut text, "steps", steps);
        echo(&mut text, "grid", grid);
        echo(&mut text, "offset", offset);
        if oracle {
            echo(&mut text, "oracle", "square-well");
        }
        if let Some(o) = &out {
            echo(&mut text, "out", o);
        }
        let curve = bound::track_spectrum(&template, lo, hi, steps, grid)?;
        let _ = writeln!(text, "{header}");
        for sample in &curve.samples {
            if sample.error.is_some() {
                let cell = if oracle { ",NaN" } else { "" };
                let _ = writeln!(text, "{},-1,NaN,NaN,failed{}", num(sample.ev0), cell);
                continue;
            }
            let sq = square_levels(oracle, m, a, sample.ev0);
            spectrum_rows(&mut text, sample.ev0, &sample.states, oracle, &sq);
        }
    } else {
        let ev0 = rz.f64_req(args.ev0, "ev0")?;
        template.ev0 = ev0;
        echo(&mut text, "ev0", ev0);
        echo(&mut text, "grid", grid);
        echo(&mut text, "offset", offset);
        if oracle {
            echo(&mut text, "oracle", "square-well");
        }
        if let Some(o) = &out {
            echo(&mut text, "out", o);
        }
        let states = bound::find_spectrum(&template, grid)?;
        let _ = writeln!(text, "{header}");
        let sq = square_levels(oracle, m, a, ev0);
        spectrum_rows(&mut text, ev0, &states, oracle, &sq);
    }
    write_artifact(out.as_deref(), &text)
}

fn run_critical(args: CriticalArgs) -> Result<()> {
    let rz = Resolver::load(args.config.as_deref())?;
    let m = rz.f64_or(args.m, "m", 1.0)?;
    let a = rz.f64_req(args.a, "a")?;
    let r = rz.f64_req(args.r, "r")?;
    let (lo, hi) = parse_span(&rz.str_req(args.bracket, "bracket")?)?;
    let method = parse_method(&rz.str_or(args.method, "method", "count-drop"))?;
    let out = rz.str_opt(args.out, "out");

    let template = PhysicalSetup::new(m, a, r, 0.0, 0.0);
    let point = bound::find_critical(&template, (lo, hi), method)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "{{\"eV0_cr\":{},\"E_cr\":{},\"method\":\"{}\",\"bracket\":[{},{}],\"r\":{},\"a\":{},\"m\":{}}}",
        num(point.ev0_cr),
        num(point.e_cr),
        point.method.token(),
        num(point.bracket.0),
        num(point.bracket.1),
        num(r),
        num(a),
        num(m)
    );
    write_artifact(out.as_deref(), &text)
}

fn run_algebra_check(args: AlgebraCheckArgs) -> Result<()> {
    let rz = Resolver::load(args.config.as_deref())?;
    let spin_str = rz.str_or(args.spin, "spin", "both");
    let out = rz.str_opt(args.out, "out");
    let spins: Vec<Spin> = match spin_str.as_str() {
        "0" => vec![Spin::Zero],
        "1" => vec![Spin::One],
        "both" => vec![Spin::Zero, Spin::One],
        other => {
            return Err(Error::Config(format!(
                "spin must be 0, 1, or both, got {other}"
            )))
        }
    };

    let mut text = String::new();
    let _ = writeln!(text, "# dkp-ws algebra-check");
    echo(&mut text, "spin", &spin_str);
    let mut rows = String::new();
    let mut violations = 0usize;
    for s in &spins {
        let digit = match s {
            Spin::Zero => 0,
            Spin::One => 1,
        };
        let set = build_betas(*s);
        let bad = verify_algebra(&set);
        violations += bad.len();
        echo(&mut text, &format!("layout-{digit}"), set.layout());
        let _ = writeln!(rows, "{digit},64,{}", bad.len());
    }
    text.push_str("spin,triples,violations\n");
    text.push_str(&rows);
    write_artifact(out.as_deref(), &text)?;
    if violations > 0 {
        return Err(Error::InvalidSetup(format!(
            "beta algebra violated in {violations} triples"
        )));
    }
    Ok(())
}

fn run_hyp2f1_eval(args: Hyp2f1EvalArgs) -> Result<()> {
    let rz = Resolver::load(args.config.as_deref())?;
    let alpha = parse_complex(&rz.str_req(args.alpha, "alpha")?)?;
    let beta = parse_complex(&rz.str_req(args.beta, "beta")?)?;
    let gamma = parse_complex(&rz.str_req(args.gamma, "gamma")?)?;
    let z = parse_complex(&rz.str_req(args.z, "z")?)?;
    let out = rz.str_opt(args.out, "out");

    let value = hyp2f1(&Hyp2F1Args {
        alpha,
        beta,
        gamma,
        z,
        log1m_z: None,
    })?;
    let w = value.to_complex();

    let mut text = String::new();
    let _ = writeln!(text, "# dkp-ws hyp2f1-eval");
    echo(&mut text, "alpha", format_args!("{},{}", alpha.re, alpha.im));
    echo(&mut text, "beta", format_args!("{},{}", beta.re, beta.im));
    echo(&mut text, "gamma", format_args!("{},{}", gamma.re, gamma.im));
    echo(&mut text, "z", format_args!("{},{}", z.re, z.im));
    if let Some(o) = &out {
        echo(&mut text, "out", o);
    }
    let _ = writeln!(text, "log_mag,phase,re,im");
    let _ = writeln!(
        text,
        "{},{},{},{}",
        num(value.log_mag),
        num(value.phase),
        num(w.re),
        num(w.im)
    );
    write_artifact(out.as_deref(), &text)
}

fn run_potential_profile(args: PotentialProfileArgs) -> Result<()> {
    let rz = Resolver::load(args.config.as_deref())?;
    let a = rz.f64_req(args.a, "a")?;
    let r = rz.f64_req(args.r, "r")?;
    let ev0 = rz.f64_or(args.ev0, "ev0", 1.0)?;
    if !(a > 0.0) || !(r > 0.0) || !(ev0 >= 0.0) {
        return Err(Error::InvalidSetup(format!(
            "potential profile needs a > 0, r > 0, eV0 >= 0; got a={a}, r={r}, eV0={ev0}"
        )));
    }
    let (lo, hi) = match rz.str_opt(args.range, "range") {
        Some(s) => parse_span(&s)?,
        None => (-3.0 * a, 3.0 * a),
    };
    let steps = rz.usize_or(args.steps, "steps", DEFAULT_PROFILE_STEPS)?;
    if steps == 0 || !(hi >= lo) {
        return Err(Error::InvalidSetup(format!(
            "profile needs steps >= 1 and hi >= lo; got steps={steps}, range {lo}:{hi}"
        )));
    }
    let out = rz.str_opt(args.out, "out");

    let mut text = String::new();
    let _ = writeln!(text, "# dkp-ws potential-profile");
    echo(&mut text, "a", a);
    echo(&mut text, "r", r);
    echo(&mut text, "ev0", ev0);
    echo(&mut text, "range", format_args!("{lo}:{hi}"));
    echo(&mut text, "steps", steps);
    if let Some(o) = &out {
        echo(&mut text, "out", o);
    }
    let _ = writeln!(text, "z,V");
    for j in 0..=steps {
        let z = lo + (hi - lo) * (j as f64) / (steps as f64);
        let v = -ev0 / (1.0 + ((z.abs() - a) / r).exp());
        let _ = writeln!(text, "{},{}", num(z), num(v));
    }
    write_artifact(out.as_deref(), &text)
}
