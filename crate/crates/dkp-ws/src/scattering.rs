//! Scattering off the Woods-Saxon well: kinematic parameters, wave
//! amplitudes, reflection and transmission coefficients, grid sweeps
//! and resonance extraction.
//!
//! The stationary problem reduces to a hypergeometric equation in the
//! variable `y(z) = 1/(1 + exp((|z|-a)/r))`; matching at the origin
//! produces six amplitudes `F1..F6` evaluated at `y = lambda`, the
//! value of the variable at `z = 0`. Reflection and transmission come
//! out as
//!
//! ```text
//! R = 1/4 |lambda^(2 mu)|^2 |F6/F5 + F2/F1|^2
//! T = 1/4 |lambda^(2 mu)|^2 |F6/F5 - F2/F1|^2
//! ```
//!
//! with every factor carried in log form: `lambda` sits within
//! `exp(-a/r)` of 1, so the prefactors and hypergeometric values have
//! exponents proportional to `a/r` (13333 in the sharpest published
//! regime) that must cancel symbolically rather than numerically.

use num_complex::Complex64;

use crate::hyp2f1::{hyp2f1, Hyp2F1Args};
use crate::log_complex::LogComplex;
use crate::{Error, Result};

/// Default relative offset (in units of m) kept between any sampled
/// energy and the channel thresholds |E| = m, |E + eV0| = m.
pub const DEFAULT_OFFSET_REL: f64 = 1e-6;

/// A denominator amplitude whose log-magnitude falls below ln(1e-300)
/// counts as a pole; the amplitude ratio is reported undefined there.
pub const POLE_LOG_FLOOR: f64 = -300.0 * std::f64::consts::LN_10;

/// First nudge applied to E when hypergeometric parameters collide with
/// a degenerate configuration, relative to max(|E|, m). Escalates by
/// [`NUDGE_GROWTH`] up to [`NUDGE_MAX_ATTEMPTS`] times.
pub const NUDGE_REL: f64 = 1e-10;
const NUDGE_GROWTH: f64 = 10.0;
const NUDGE_MAX_ATTEMPTS: u32 = 8;

/// Sweep rows whose unitarity residual exceeds this are flagged.
pub const UNITARITY_FLAG_TOL: f64 = 1e-6;

/// Default acceptance threshold on T for resonance extraction.
pub const RESONANCE_THRESHOLD: f64 = 0.5;

/// Well geometry plus the probe energy. Energies and the depth are in
/// units of m once m = 1; lengths are in units of 1/m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalSetup {
    pub m: f64,
    /// Half-width a of the flat region.
    pub a: f64,
    /// Edge thickness r; the square well is the limit r -> 0.
    pub r: f64,
    /// Well depth eV0 >= 0.
    pub ev0: f64,
    /// Total energy E.
    pub e: f64,
    /// Half-width of the exclusion band kept around each threshold
    /// |E| = m, |E + eV0| = m, as a fraction of m.
    pub offset_rel: f64,
}

impl PhysicalSetup {
    /// Setup with the default threshold offset.
    pub fn new(m: f64, a: f64, r: f64, ev0: f64, e: f64) -> Self {
        PhysicalSetup {
            m,
            a,
            r,
            ev0,
            e,
            offset_rel: DEFAULT_OFFSET_REL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m > 0.0) || !(self.a > 0.0) || !(self.r > 0.0) || !(self.ev0 >= 0.0) {
            return Err(Error::InvalidSetup(format!(
                "need m > 0, a > 0, r > 0, eV0 >= 0; got m={}, a={}, r={}, eV0={}",
                self.m, self.a, self.r, self.ev0
            )));
        }
        if !(self.offset_rel > 0.0) || !(self.offset_rel < 0.1) {
            return Err(Error::InvalidSetup(format!(
                "threshold offset must lie in (0, 0.1), got {}",
                self.offset_rel
            )));
        }
        Ok(())
    }

    /// Absolute threshold offset for this mass.
    pub fn offset_abs(&self) -> f64 {
        self.offset_rel * self.m
    }
}

/// One hypergeometric parameter triple (alpha, beta; gamma).
#[derive(Debug, Clone, Copy)]
pub struct ParamTriple {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
}

/// Everything derived from a [`PhysicalSetup`] that the amplitudes
/// consume.
#[derive(Debug, Clone, Copy)]
pub struct KinematicParams {
    /// lambda = 1/(1 + exp(-a/r)), the matching point in (1/2, 1).
    pub lambda: f64,
    /// ln(lambda), computed as -ln(1 + exp(-a/r)).
    pub log_lambda: f64,
    /// ln(1 - lambda) = -a/r + ln(lambda), exact even when 1 - lambda
    /// underflows.
    pub log1m_lambda: f64,
    /// mu^2 = r^2 (m^2 - E^2); mu = i r k in the scattering regime,
    /// real positive in the bound regime.
    pub mu: Complex64,
    /// nu^2 = r^2 (m^2 - (E + eV0)^2).
    pub nu: Complex64,
    /// nu0 = sqrt((1 - 2 r eV0)(1 + 2 r eV0)).
    pub nu0: Complex64,
    /// Outer momentum, k^2 = E^2 - m^2.
    pub k: Complex64,
    /// Inner momentum, p^2 = (E + eV0)^2 - m^2.
    pub p: Complex64,
    pub triple1: ParamTriple,
    pub triple2: ParamTriple,
}

/// Square root with the branch used throughout: real non-negative
/// result for non-negative input, `+i sqrt(-x)` otherwise.
fn branch_sqrt(x: f64) -> Complex64 {
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-x).sqrt())
    }
}

/// Derives wavenumbers, the hypergeometric exponents mu, nu, nu0 and
/// both parameter triples:
///
/// ```text
/// alpha_1, beta_1 = (-mu + nu + 1/2) -+ nu0/2,   gamma_1 = 1 - 2 mu
/// alpha_2, beta_2 = ( mu + nu + 1/2) -+ nu0/2,   gamma_2 = 1 + 2 mu
/// ```
///
/// Energies exactly on a channel threshold are rejected; sweeps keep an
/// offset band around them instead of sampling there.
pub fn derive_params(setup: &PhysicalSetup) -> Result<KinematicParams> {
    setup.validate()?;
    let (m, e, ev0, r) = (setup.m, setup.e, setup.ev0, setup.r);
    if e.abs() == m || (e + ev0).abs() == m {
        return Err(Error::ThresholdEnergy);
    }

    let x = setup.a / r;
    let emx = (-x).exp();
    let lambda = 1.0 / (1.0 + emx);
    let log_lambda = -emx.ln_1p();
    let log1m_lambda = -x + log_lambda;

    let k = branch_sqrt(e * e - m * m);
    let p = branch_sqrt((e + ev0) * (e + ev0) - m * m);
    let mu = r * branch_sqrt(m * m - e * e);
    let nu = r * branch_sqrt(m * m - (e + ev0) * (e + ev0));
    let tr = 2.0 * r * ev0;
    let nu0 = branch_sqrt((1.0 - tr) * (1.0 + tr));

    let half = Complex64::new(0.5, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let base1 = -mu + nu + half;
    let base2 = mu + nu + half;
    let triple1 = ParamTriple {
        alpha: base1 - nu0 * 0.5,
        beta: base1 + nu0 * 0.5,
        gamma: one - 2.0 * mu,
    };
    let triple2 = ParamTriple {
        alpha: base2 - nu0 * 0.5,
        beta: base2 + nu0 * 0.5,
        gamma: one + 2.0 * mu,
    };

    Ok(KinematicParams {
        lambda,
        log_lambda,
        log1m_lambda,
        mu,
        nu,
        nu0,
        k,
        p,
        triple1,
        triple2,
    })
}

/// The six matching amplitudes and the `lambda^(2 mu)` prefactor.
#[derive(Debug, Clone, Copy)]
pub struct AmplitudeSet {
    pub f1: LogComplex,
    pub f2: LogComplex,
    pub f3: LogComplex,
    pub f4: LogComplex,
    pub f5: LogComplex,
    pub f6: LogComplex,
    pub lambda_pow_2mu: LogComplex,
}

fn eval_f(triple: &ParamTriple, lambda: f64, log1m_lambda: f64, which: &'static str) -> Result<LogComplex> {
    let args = Hyp2F1Args {
        alpha: triple.alpha,
        beta: triple.beta,
        gamma: triple.gamma,
        z: Complex64::new(lambda, 0.0),
        log1m_z: Some(Complex64::new(log1m_lambda, 0.0)),
    };
    hyp2f1(&args).map_err(|e| Error::Amplitude {
        which,
        source: Box::new(e),
    })
}

fn shift_triple(t: &ParamTriple) -> ParamTriple {
    ParamTriple {
        alpha: t.alpha + 1.0,
        beta: t.beta + 1.0,
        gamma: t.gamma + 1.0,
    }
}

/// Evaluates F1..F4 at `z = lambda` and assembles the derivative
/// combinations
///
/// ```text
/// F5 = [-mu + lambda (mu - nu)] F1 + lambda (1-lambda) (a1 b1 / g1) F3
/// F6 = [ mu - lambda (mu + nu)] F2 + lambda (1-lambda) (a2 b2 / g2) F4
/// ```
///
/// The factor `lambda (1 - lambda)` is formed as
/// `exp(log_lambda + log1m_lambda)` so the sharp-edge regime keeps its
/// exact exponent.
pub fn amplitudes(params: &KinematicParams) -> Result<AmplitudeSet> {
    let f1 = eval_f(&params.triple1, params.lambda, params.log1m_lambda, "F1")?;
    let f2 = eval_f(&params.triple2, params.lambda, params.log1m_lambda, "F2")?;
    let f3 = eval_f(&shift_triple(&params.triple1), params.lambda, params.log1m_lambda, "F3")?;
    let f4 = eval_f(&shift_triple(&params.triple2), params.lambda, params.log1m_lambda, "F4")?;

    let lam = Complex64::new(params.lambda, 0.0);
    let lam_one_minus = LogComplex::from_log(Complex64::new(
        params.log_lambda + params.log1m_lambda,
        0.0,
    ));

    let t1 = &params.triple1;
    let t2 = &params.triple2;
    let lead5 = -params.mu + lam * (params.mu - params.nu);
    let lead6 = params.mu - lam * (params.mu + params.nu);
    let f5 = LogComplex::from_complex(lead5) * f1
        + lam_one_minus * LogComplex::from_complex(t1.alpha * t1.beta / t1.gamma) * f3;
    let f6 = LogComplex::from_complex(lead6) * f2
        + lam_one_minus * LogComplex::from_complex(t2.alpha * t2.beta / t2.gamma) * f4;

    let lambda_pow_2mu = LogComplex::from_log(2.0 * params.mu * params.log_lambda);

    Ok(AmplitudeSet {
        f1,
        f2,
        f3,
        f4,
        f5,
        f6,
        lambda_pow_2mu,
    })
}

fn amplitude_ratios(amps: &AmplitudeSet) -> Result<(LogComplex, LogComplex)> {
    if amps.f5.log_mag < POLE_LOG_FLOOR {
        return Err(Error::AmplitudePole { which: "F5" });
    }
    if amps.f1.log_mag < POLE_LOG_FLOOR {
        return Err(Error::AmplitudePole { which: "F1" });
    }
    Ok((amps.f6 / amps.f5, amps.f2 / amps.f1))
}

fn require_scattering(params: &KinematicParams) -> Result<()> {
    if params.mu.re != 0.0 {
        return Err(Error::WrongRegime {
            need: "scattering",
            detail: format!("mu = {} is not purely imaginary, so |E| < m here", params.mu),
        });
    }
    Ok(())
}

/// Reflection coefficient `R = 1/4 |lambda^(2mu)|^2 |F6/F5 + F2/F1|^2`.
pub fn reflection(amps: &AmplitudeSet, params: &KinematicParams) -> Result<f64> {
    require_scattering(params)?;
    let (r65, r21) = amplitude_ratios(amps)?;
    let combined = (r65 + r21) * amps.lambda_pow_2mu;
    Ok(0.25 * combined.abs_sq())
}

/// Transmission coefficient `T = 1/4 |lambda^(2mu)|^2 |F6/F5 - F2/F1|^2`.
pub fn transmission(amps: &AmplitudeSet, params: &KinematicParams) -> Result<f64> {
    require_scattering(params)?;
    let (r65, r21) = amplitude_ratios(amps)?;
    let combined = (r65 + (-r21)) * amps.lambda_pow_2mu;
    Ok(0.25 * combined.abs_sq())
}

/// Runs `eval` on the setup, retrying with an escalating energy nudge
/// whenever the hypergeometric parameters land on a degenerate
/// configuration. Returns the result together with the nudge actually
/// applied (0.0 when none was needed).
pub fn with_degeneracy_nudge<T>(
    setup: &PhysicalSetup,
    eval: impl Fn(&PhysicalSetup) -> Result<T>,
) -> Result<(T, f64)> {
    let mut delta = 0.0;
    for attempt in 0..=NUDGE_MAX_ATTEMPTS {
        let nudged = PhysicalSetup {
            e: setup.e + delta,
            ..*setup
        };
        match eval(&nudged) {
            Ok(v) => return Ok((v, delta)),
            Err(e) if is_degenerate(&e) => {
                let base = NUDGE_REL * setup.e.abs().max(setup.m);
                delta = base * NUDGE_GROWTH.powi(attempt as i32);
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::NudgeExhausted {
        e: setup.e,
        attempts: NUDGE_MAX_ATTEMPTS,
    })
}

fn is_degenerate(e: &Error) -> bool {
    match e {
        Error::DegenerateConnection { .. } | Error::BadGammaParameter { .. } | Error::GammaPole { .. } => true,
        Error::Amplitude { source, .. } => is_degenerate(source),
        _ => false,
    }
}

/// R and T at a single energy.
#[derive(Debug, Clone, Copy)]
pub struct RtPoint {
    pub r_coef: f64,
    pub t_coef: f64,
    /// True when a degeneracy nudge was applied to E.
    pub nudged: bool,
}

/// Computes R and T for one setup, with degeneracy nudging.
pub fn evaluate_rt(setup: &PhysicalSetup) -> Result<RtPoint> {
    let ((r_coef, t_coef), delta) = with_degeneracy_nudge(setup, |s| {
        let params = derive_params(s)?;
        let amps = amplitudes(&params)?;
        Ok((reflection(&amps, &params)?, transmission(&amps, &params)?))
    })?;
    Ok(RtPoint {
        r_coef,
        t_coef,
        nudged: delta != 0.0,
    })
}

/// Which setup field a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Energy,
    Depth,
}

impl SweepVariable {
    pub fn key(&self) -> &'static str {
        match self {
            SweepVariable::Energy => "E",
            SweepVariable::Depth => "ev0",
        }
    }
}

/// Per-row annotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowFlag {
    /// A degeneracy nudge moved E before evaluation.
    Nudged,
    /// F5 or F1 underflowed; the ratios are undefined here.
    Pole,
    /// The row fell inside the threshold offset band (this includes the
    /// whole bound band |E| <= m of an energy sweep) and was not
    /// evaluated.
    SkippedThreshold,
    /// |R + T - 1| exceeded the flag tolerance.
    NonUnitary,
    /// Evaluation failed for a reason other than a pole.
    Failed,
}

impl RowFlag {
    pub fn token(&self) -> &'static str {
        match self {
            RowFlag::Nudged => "nudged",
            RowFlag::Pole => "pole",
            RowFlag::SkippedThreshold => "skipped-threshold",
            RowFlag::NonUnitary => "nonunitary",
            RowFlag::Failed => "failed",
        }
    }
}

/// One sweep sample. Value fields are `None` when the row was skipped
/// or failed; the flags say which.
#[derive(Debug, Clone)]
pub struct SweepRow {
    /// The swept variable's value.
    pub x: f64,
    pub e: f64,
    pub ev0: f64,
    pub r_coef: Option<f64>,
    pub t_coef: Option<f64>,
    /// R + T - 1 where both coefficients exist.
    pub unitarity: Option<f64>,
    pub flags: Vec<RowFlag>,
    pub error: Option<Error>,
}

#[derive(Debug, Clone)]
pub struct SweepTable {
    pub variable: SweepVariable,
    pub rows: Vec<SweepRow>,
}

/// Uniform sweep over E or eV0 with `steps` intervals (`steps + 1`
/// rows, endpoints included).
///
/// Rows inside the threshold offset band are skipped rather than
/// evaluated; per-row failures are recorded in the row and the sweep
/// continues.
pub fn sweep(
    template: &PhysicalSetup,
    variable: SweepVariable,
    lo: f64,
    hi: f64,
    steps: usize,
) -> Result<SweepTable> {
    template.validate()?;
    if steps == 0 || !(hi >= lo) {
        return Err(Error::InvalidSetup(format!(
            "sweep needs steps >= 1 and hi >= lo; got steps={steps}, range {lo}:{hi}"
        )));
    }
    let off = template.offset_abs();
    let mut rows = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let x = lo + (hi - lo) * (i as f64) / (steps as f64);
        let setup = match variable {
            SweepVariable::Energy => PhysicalSetup { e: x, ..*template },
            SweepVariable::Depth => PhysicalSetup { ev0: x, ..*template },
        };
        rows.push(sweep_row(&setup, x, off));
    }
    Ok(SweepTable { variable, rows })
}

fn sweep_row(setup: &PhysicalSetup, x: f64, off: f64) -> SweepRow {
    let mut row = SweepRow {
        x,
        e: setup.e,
        ev0: setup.ev0,
        r_coef: None,
        t_coef: None,
        unitarity: None,
        flags: Vec::new(),
        error: None,
    };
    let inner = (setup.e + setup.ev0).abs();
    if setup.e.abs() < setup.m + off || (inner - setup.m).abs() <= off {
        row.flags.push(RowFlag::SkippedThreshold);
        return row;
    }
    match evaluate_rt(setup) {
        Ok(pt) => {
            let resid = pt.r_coef + pt.t_coef - 1.0;
            row.r_coef = Some(pt.r_coef);
            row.t_coef = Some(pt.t_coef);
            row.unitarity = Some(resid);
            if pt.nudged {
                row.flags.push(RowFlag::Nudged);
            }
            if resid.abs() > UNITARITY_FLAG_TOL {
                row.flags.push(RowFlag::NonUnitary);
            }
        }
        Err(Error::ThresholdEnergy) => {
            row.flags.push(RowFlag::SkippedThreshold);
        }
        Err(e @ Error::AmplitudePole { .. }) => {
            row.flags.push(RowFlag::Pole);
            row.error = Some(e);
        }
        Err(e) => {
            row.flags.push(RowFlag::Failed);
            row.error = Some(e);
        }
    }
    row
}

/// A refined transmission maximum.
#[derive(Debug, Clone, Copy)]
pub struct Resonance {
    /// Refined position in the swept variable.
    pub x: f64,
    /// Parabolic estimate of the peak transmission.
    pub t: f64,
}

/// Extracts strict local maxima of T above `threshold` from a sweep,
/// refining each through the parabola over the maximum and its two
/// valid neighbors. Skipped rows simply do not participate.
pub fn find_resonances(table: &SweepTable, threshold: f64) -> Vec<Resonance> {
    let pts: Vec<(f64, f64)> = table
        .rows
        .iter()
        .filter_map(|row| match row.t_coef {
            Some(t) if t.is_finite() => Some((row.x, t)),
            _ => None,
        })
        .collect();
    let mut out = Vec::new();
    for w in pts.windows(3) {
        let [(x0, t0), (x1, t1), (x2, t2)] = [w[0], w[1], w[2]];
        if !(t1 > t0 && t1 > t2) {
            continue;
        }
        let (x, t) = parabolic_vertex(x0, t0, x1, t1, x2, t2);
        if t > threshold {
            out.push(Resonance { x, t });
        }
    }
    out
}

/// Vertex of the quadratic through three points, clamped to the outer
/// abscissas. Falls back to the middle sample when the points are
/// collinear.
fn parabolic_vertex(x0: f64, t0: f64, x1: f64, t1: f64, x2: f64, t2: f64) -> (f64, f64) {
    let d1 = (t1 - t0) / (x1 - x0);
    let d2 = (t2 - t1) / (x2 - x1);
    let curv = (d2 - d1) / (x2 - x0);
    if !(curv < 0.0) {
        return (x1, t1);
    }
    let x_star = (0.5 * (x0 + x1) - d1 / (2.0 * curv)).clamp(x0, x2);
    let t_star = t0 + d1 * (x_star - x0) + curv * (x_star - x0) * (x_star - x1);
    (x_star, t_star)
}
