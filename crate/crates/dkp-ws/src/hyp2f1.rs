//! Gauss hypergeometric function 2F1 for complex parameters.
//!
//! Two evaluation routes cover everything the solver needs: the
//! defining power series inside `|z| <= 0.8`, and the `1 - z`
//! connection formula for arguments crowding the logarithmic
//! singularity at `z = 1` (the deep-well regime pushes `lambda`
//! within `exp(-a/r)` of 1, far closer than floating point can
//! represent through `1 - lambda` itself, which is why callers can
//! hand over `ln(1 - z)` directly).

use num_complex::Complex64;

use crate::dd::DdComplex;
use crate::gamma::ln_gamma;
use crate::log_complex::LogComplex;
use crate::{Error, Result};

/// The series is used inside this radius.
pub const SERIES_RADIUS: f64 = 0.8;

/// Without an explicit `log1m_z`, the connection formula is used when
/// `|1 - z|` is below this.
pub const NEAR_ONE_RADIUS: f64 = 0.2;

/// Series stopping rule: the last `SERIES_RUN` consecutive terms must
/// each fall below `SERIES_REL_TOL` times the partial sum.
const SERIES_REL_TOL: f64 = 1e-15;
const SERIES_RUN: u32 = 3;
const SERIES_MAX_TERMS: usize = 100_000;

/// `gamma - alpha - beta` closer than this to an integer makes the
/// two-term connection formula degenerate.
pub const DEGENERATE_TOL: f64 = 1e-8;

/// `ln(1 - z)` real parts below this make `(1 - z)` itself an exact
/// floating-point zero inside the connection series.
const LOG_UNDERFLOW: f64 = -700.0;

/// Arguments of `2F1(alpha, beta; gamma; z)`.
///
/// `log1m_z`, when present, is an exact logarithm of `1 - z` supplied
/// by the caller; it overrides any attempt to form `1 - z` in plain
/// arithmetic and is what keeps the sharp-edge regime accurate.
#[derive(Debug, Clone, Copy)]
pub struct Hyp2F1Args {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub z: Complex64,
    pub log1m_z: Option<Complex64>,
}

fn is_nonpositive_integer(w: Complex64) -> bool {
    w.im == 0.0 && w.re <= 0.0 && w.re == w.re.floor()
}

/// Defining power series, valid for `|z| <= 0.8`.
///
/// Terms follow the ratio recurrence
/// `t_{n+1} = t_n * (alpha + n)(beta + n) / ((gamma + n)(n + 1)) * z`,
/// which terminates exactly when `alpha` or `beta` is a non-positive
/// integer. The loop runs in double-double arithmetic: near the edge
/// of the disc with large parameters the terms overshoot the sum by
/// orders of magnitude, and plain f64 accumulation would surrender
/// several digits to the cancellation.
pub fn hyp2f1_series(args: &Hyp2F1Args) -> Result<Complex64> {
    if is_nonpositive_integer(args.gamma) {
        return Err(Error::BadGammaParameter { gamma: args.gamma });
    }
    if args.z.norm() > SERIES_RADIUS {
        return Err(Error::UnsupportedArgument { z: args.z });
    }
    let alpha = DdComplex::from_c(args.alpha);
    let beta = DdComplex::from_c(args.beta);
    let gamma = DdComplex::from_c(args.gamma);
    let z = DdComplex::from_c(args.z);
    let mut term = DdComplex::ONE;
    let mut sum = term;
    let mut quiet_run = 0u32;
    for n in 0..SERIES_MAX_TERMS {
        let nf = n as f64;
        let num = alpha.add_re(nf).mul(beta.add_re(nf)).mul(z);
        let den = gamma.add_re(nf).mul(DdComplex::from_c(Complex64::new(nf + 1.0, 0.0)));
        term = term.mul(num.div(den));
        sum = sum.add(term);
        if term.norm_approx() < SERIES_REL_TOL * sum.norm_approx() {
            quiet_run += 1;
            if quiet_run >= SERIES_RUN {
                return Ok(sum.to_c());
            }
        } else {
            quiet_run = 0;
        }
    }
    Err(Error::SeriesStalled {
        z: args.z,
        max_terms: SERIES_MAX_TERMS,
    })
}

/// Ratio of gamma functions `prod Gamma(nums) / prod Gamma(dens)` in
/// log form. A pole in the denominator annihilates the whole
/// coefficient; a pole in the numerator cannot be represented and is an
/// error.
fn gamma_ratio(nums: &[Complex64], dens: &[Complex64]) -> Result<LogComplex> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &n in nums {
        acc += ln_gamma(n)?;
    }
    for &d in dens {
        match ln_gamma(d) {
            Ok(v) => acc -= v,
            Err(Error::GammaPole { .. }) => return Ok(LogComplex::ZERO),
            Err(e) => return Err(e),
        }
    }
    Ok(LogComplex::from_log(acc))
}

/// Principal `ln(1 - z)`, with real `z > 1` resolved onto the upper
/// branch, matching the limit `Im z -> 0^-` used throughout the
/// scattering formulas.
fn ln_one_minus(z: Complex64) -> Complex64 {
    let mut w = Complex64::new(1.0 - z.re, -z.im);
    if w.im == 0.0 {
        w = Complex64::new(w.re, 0.0);
    }
    w.ln()
}

/// Two-term connection formula around `z = 1`:
///
/// ```text
/// 2F1(a, b; c; z) = A * 2F1(a, b; a+b-c+1; 1-z)
///                 + B * (1-z)^s * 2F1(c-a, c-b; s+1; 1-z)
/// s = c - a - b
/// A = Gamma(c) Gamma(s)  / (Gamma(c-a) Gamma(c-b))
/// B = Gamma(c) Gamma(-s) / (Gamma(a) Gamma(b))
/// ```
///
/// The result is returned in log form because `(1-z)^s` alone can carry
/// exponents of thousands. `s` within [`DEGENERATE_TOL`] of an integer
/// is rejected (the formula degenerates to a logarithmic case); callers
/// recover by nudging a parameter.
pub fn hyp2f1_connection_1mz(args: &Hyp2F1Args) -> Result<LogComplex> {
    if is_nonpositive_integer(args.gamma) {
        return Err(Error::BadGammaParameter { gamma: args.gamma });
    }
    let zero = Complex64::new(0.0, 0.0);
    if args.alpha == zero || args.beta == zero {
        return Ok(LogComplex::ONE);
    }
    let s = args.gamma - args.alpha - args.beta;
    let nearest = Complex64::new(s.re.round(), 0.0);
    if (s - nearest).norm() < DEGENERATE_TOL {
        return Err(Error::DegenerateConnection {
            s,
            tol: DEGENERATE_TOL,
        });
    }
    let log1m = args.log1m_z.unwrap_or_else(|| ln_one_minus(args.z));
    let w = if log1m.re > LOG_UNDERFLOW {
        log1m.exp()
    } else {
        zero
    };

    let coeff_a = gamma_ratio(
        &[args.gamma, s],
        &[args.gamma - args.alpha, args.gamma - args.beta],
    )?;
    let coeff_b = gamma_ratio(&[args.gamma, -s], &[args.alpha, args.beta])?;

    let series_a = hyp2f1_series(&Hyp2F1Args {
        alpha: args.alpha,
        beta: args.beta,
        gamma: args.alpha + args.beta - args.gamma + 1.0,
        z: w,
        log1m_z: None,
    })?;
    let series_b = hyp2f1_series(&Hyp2F1Args {
        alpha: args.gamma - args.alpha,
        beta: args.gamma - args.beta,
        gamma: s + 1.0,
        z: w,
        log1m_z: None,
    })?;

    let term_a = coeff_a * LogComplex::from_complex(series_a);
    let term_b = coeff_b * LogComplex::from_log(s * log1m) * LogComplex::from_complex(series_b);
    Ok(term_a + term_b)
}

/// Dispatching evaluator.
///
/// `|z| <= 0.8` goes to the series; otherwise the connection formula
/// handles arguments near 1, either because `|1 - z| < 0.2` or because
/// the caller supplied `log1m_z`. Anything else is out of the supported
/// region.
pub fn hyp2f1(args: &Hyp2F1Args) -> Result<LogComplex> {
    if args.z.norm() <= SERIES_RADIUS {
        return Ok(LogComplex::from_complex(hyp2f1_series(args)?));
    }
    let near_one = args.log1m_z.is_some() || (Complex64::new(1.0, 0.0) - args.z).norm() < NEAR_ONE_RADIUS;
    if near_one {
        return hyp2f1_connection_1mz(args);
    }
    Err(Error::UnsupportedArgument { z: args.z })
}
