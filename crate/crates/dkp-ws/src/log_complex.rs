//! Complex values in log-magnitude/phase form.
//!
//! Amplitude prefactors like `lambda^(2*mu)` and hypergeometric values
//! near `z = 1` routinely carry exponents far beyond what an `f64`
//! magnitude can hold (the sharp-edge regime `r -> 0` pushes
//! `ln(1 - lambda)` to `-a/r`, which is `-13000` and beyond). Storing
//! `w = exp(log_mag + i*phase)` keeps those factors exact until ratios
//! cancel the exponents.

use num_complex::Complex64;

/// A nonzero complex number `exp(log_mag) * exp(i * phase)`, or zero.
///
/// Zero is the sentinel `log_mag = -inf` with `phase = 0`. Phases are
/// accumulated as given and never reduced modulo `2*pi`; only `cos` and
/// `sin` of the phase are ever consumed, so the representation stays
/// faithful for arbitrarily long products.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogComplex {
    pub log_mag: f64,
    pub phase: f64,
}

impl LogComplex {
    pub const ZERO: LogComplex = LogComplex {
        log_mag: f64::NEG_INFINITY,
        phase: 0.0,
    };

    pub const ONE: LogComplex = LogComplex {
        log_mag: 0.0,
        phase: 0.0,
    };

    /// Wraps an ordinary complex value. `0 + 0i` maps to the zero
    /// sentinel.
    pub fn from_complex(w: Complex64) -> Self {
        if w.re == 0.0 && w.im == 0.0 {
            return Self::ZERO;
        }
        LogComplex {
            log_mag: w.norm().ln(),
            phase: w.arg(),
        }
    }

    /// Interprets `w` as a logarithm: the represented value is `exp(w)`.
    ///
    /// This is how quantities like `mu * ln(lambda)` enter without ever
    /// being exponentiated in plain arithmetic.
    pub fn from_log(w: Complex64) -> Self {
        LogComplex {
            log_mag: w.re,
            phase: w.im,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.log_mag == f64::NEG_INFINITY
    }

    /// Converts back to a plain complex number. Overflows to infinity
    /// past `log_mag ~ 709`; underflows to zero below `~ -745`.
    pub fn to_complex(self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let mag = self.log_mag.exp();
        Complex64::new(mag * self.phase.cos(), mag * self.phase.sin())
    }

    /// Squared magnitude as a plain `f64`, `exp(2 * log_mag)`.
    pub fn abs_sq(&self) -> f64 {
        (2.0 * self.log_mag).exp()
    }

    /// Sums terms by factoring out the largest magnitude, so the result
    /// is accurate even when every term is far outside `f64` range.
    pub fn sum(terms: &[LogComplex]) -> LogComplex {
        let m = terms
            .iter()
            .map(|t| t.log_mag)
            .fold(f64::NEG_INFINITY, f64::max);
        if m == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for t in terms {
            if t.is_zero() {
                continue;
            }
            let scaled = (t.log_mag - m).exp();
            acc += Complex64::new(scaled * t.phase.cos(), scaled * t.phase.sin());
        }
        let folded = LogComplex::from_complex(acc);
        if folded.is_zero() {
            return Self::ZERO;
        }
        LogComplex {
            log_mag: folded.log_mag + m,
            phase: folded.phase,
        }
    }
}

impl std::ops::Mul for LogComplex {
    type Output = LogComplex;
    fn mul(self, rhs: LogComplex) -> LogComplex {
        if self.is_zero() || rhs.is_zero() {
            return LogComplex::ZERO;
        }
        LogComplex {
            log_mag: self.log_mag + rhs.log_mag,
            phase: self.phase + rhs.phase,
        }
    }
}

impl std::ops::Div for LogComplex {
    type Output = LogComplex;

    /// Division by the zero sentinel produces NaN fields; callers are
    /// expected to test the divisor first.
    fn div(self, rhs: LogComplex) -> LogComplex {
        if self.is_zero() {
            return LogComplex::ZERO;
        }
        LogComplex {
            log_mag: self.log_mag - rhs.log_mag,
            phase: self.phase - rhs.phase,
        }
    }
}

impl std::ops::Neg for LogComplex {
    type Output = LogComplex;
    fn neg(self) -> LogComplex {
        if self.is_zero() {
            return self;
        }
        LogComplex {
            log_mag: self.log_mag,
            phase: self.phase + std::f64::consts::PI,
        }
    }
}

impl std::ops::Add for LogComplex {
    type Output = LogComplex;
    fn add(self, rhs: LogComplex) -> LogComplex {
        LogComplex::sum(&[self, rhs])
    }
}
