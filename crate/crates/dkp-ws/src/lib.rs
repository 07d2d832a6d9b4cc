//! Scattering and bound states of DKP particles in a one-dimensional
//! Woods-Saxon well.
//!
//! The Duffin-Kemmer-Petiau equation describes spin-0 and spin-1 particles
//! through a first-order wave equation with 5- and 10-dimensional matrix
//! representations. In a static well `V(z) = -V0 / (1 + exp((|z|-a)/r))`
//! every surviving spinor component reduces to the same Klein-Gordon
//! problem, which this crate solves in closed form with Gauss
//! hypergeometric functions.
//!
//! The crate computes, in units where `hbar = c = 1`:
//!
//! * reflection and transmission coefficients `R` and `T` for scattering
//!   energies ([`scattering`]),
//! * the discrete bound spectrum inside the mass gap `|E| < m`
//!   ([`bound`]),
//! * the critical depth at which an antiparticle branch appears and the
//!   well turns supercritical ([`bound::find_critical`]),
//! * exact verification of the trilinear DKP matrix algebra
//!   ([`algebra`]),
//! * square-well closed forms used as cross-checks in the sharp-edge
//!   limit `r -> 0` ([`square_well`]).
//!
//! Numerics that would overflow in naive arithmetic (powers like
//! `lambda^(2*mu)` with huge exponents, hypergeometric values near the
//! `z = 1` singularity) are carried in log-magnitude/phase form by
//! [`LogComplex`].

use num_complex::Complex64;

pub mod algebra;
pub mod bound;
pub mod cli;
mod dd;
pub mod gamma;
pub mod hyp2f1;
pub mod log_complex;
pub mod scattering;
pub mod square_well;

pub use bound::{BoundState, CriticalMethod, CriticalPoint, Parity, SpectrumCurve};
pub use gamma::ln_gamma;
pub use hyp2f1::{hyp2f1, hyp2f1_connection_1mz, hyp2f1_series, Hyp2F1Args};
pub use log_complex::LogComplex;
pub use scattering::{KinematicParams, PhysicalSetup, SweepTable, SweepVariable};
pub use square_well::SquareWell;

/// Errors shared across the solver modules.
///
/// Cloneable so that sweep and tracking routines can record a failure in
/// the affected row and keep going.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// `ln_gamma` evaluated at a non-positive integer.
    #[error("log-gamma pole: {z} is a non-positive integer")]
    GammaPole { z: Complex64 },

    /// The lower hypergeometric parameter is a non-positive integer, so
    /// 2F1 is undefined.
    #[error("hypergeometric parameter gamma = {gamma} is a non-positive integer")]
    BadGammaParameter { gamma: Complex64 },

    /// The defining series did not meet its stopping rule within the
    /// term cap.
    #[error("hypergeometric series stalled after {max_terms} terms at z = {z}")]
    SeriesStalled { z: Complex64, max_terms: usize },

    /// Argument outside both the series disc and the neighbourhood of
    /// `z = 1` covered by the connection formula.
    #[error("z = {z} is outside the supported evaluation regions")]
    UnsupportedArgument { z: Complex64 },

    /// `gamma - alpha - beta` is too close to an integer for the
    /// two-term connection formula; the caller should nudge a parameter.
    #[error("degenerate connection: gamma - alpha - beta = {s} is within {tol} of an integer")]
    DegenerateConnection { s: Complex64, tol: f64 },

    /// A wave amplitude could not be evaluated.
    #[error("amplitude {which}: {source}")]
    Amplitude {
        which: &'static str,
        #[source]
        source: Box<Error>,
    },

    /// A denominator amplitude underflowed below the pole floor, so the
    /// ratio entering R or T is undefined at this energy.
    #[error("|{which}| fell below the pole floor, amplitude ratio undefined")]
    AmplitudePole { which: &'static str },

    /// The requested energy sits exactly on a channel threshold.
    #[error("energy on a channel threshold: |E| = m or |E + eV0| = m")]
    ThresholdEnergy,

    /// Escalating parameter nudges never cleared the degeneracy.
    #[error("degeneracy nudge exhausted after {attempts} attempts near E = {e}")]
    NudgeExhausted { e: f64, attempts: u32 },

    /// Energy in the wrong regime for the requested quantity.
    #[error("{need} regime required: {detail}")]
    WrongRegime { need: &'static str, detail: String },

    /// Nonsensical physical or numerical parameters.
    #[error("invalid setup: {0}")]
    InvalidSetup(String),

    /// A critical-depth search found no transition inside its bracket.
    #[error("no critical transition inside bracket [{lo}, {hi}]")]
    NoCoalescence { lo: f64, hi: f64 },

    /// Malformed configuration input.
    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
