//! Bound states inside the mass gap and the supercritical threshold.
//!
//! In the gap `|E| < m` the exponent `mu = r sqrt(m^2 - E^2)` is real,
//! the outside wave decays, and quantization follows from matching at
//! the origin. The well is symmetric, so the spectrum splits by parity:
//! even states are zeros of `lambda^mu (1-lambda)^nu F6`, odd states
//! zeros of `lambda^mu (1-lambda)^nu F2`. An Euler transformation of
//! the hypergeometric series shows both products are exactly real for
//! real energies in the gap (the prefactor cancels the drifting phase
//! `(1-lambda)^{-nu}` carried by the raw amplitudes), which turns root
//! finding into ordinary sign bracketing.
//!
//! The module also evaluates the magnitude residual
//! `g(E) = 1/2 |lambda^(2mu)|^2 (|F6/F5|^2 + |F2/F1|^2) - 1`, the
//! analytic continuation of `R + T - 1` into the gap, and locates the
//! critical depth at which an antiparticle branch enters the spectrum
//! (count-drop method) or at which the branch pair coalesces and
//! leaves it (root-merge method).

use num_complex::Complex64;

use crate::scattering::{
    amplitudes, derive_params, with_degeneracy_nudge, PhysicalSetup, POLE_LOG_FLOOR,
};
use crate::log_complex::LogComplex;
use crate::{Error, Result};

/// Default energy-scan grid over the gap.
pub const DEFAULT_BOUND_GRID: usize = 2000;

/// Bisection width target for bound energies.
pub const ENERGY_TOL: f64 = 1e-10;

/// Local minima of |W| below this trigger the tangential-root probe.
pub const TANGENT_PROBE_TOL: f64 = 1e-4;

/// Refined |W| minima below this count as a double (tangential) root.
pub const TANGENT_ACCEPT_TOL: f64 = 1e-8;

/// Bisection width target on the critical depth.
pub const CRITICAL_DEPTH_TOL: f64 = 1e-6;

/// Coarse depth steps walked across the critical bracket before
/// bisection.
const COARSE_DEPTH_STEPS: usize = 100;

/// Band scans near E = -m use a geometric grid with this many nodes,
/// starting this fraction of m above the gap edge.
const BAND_GRID: usize = 1500;
const BAND_FLOOR_REL: f64 = 1e-9;

/// The count-drop method watches the root count in the thin zone
/// (-m, -m + 0.01 m): an appearing branch enters there from E = -m,
/// while roots already present cross its upper edge only much deeper.
const APPEARANCE_ZONE_FRACTION: f64 = 0.01;

/// The root-merge method watches (-m, -m + 0.2 m), wide enough to hold
/// the coalescing pair until it disappears.
const MERGE_BAND_FRACTION: f64 = 0.2;

/// The magnitude residual of the matching condition at one energy.
#[derive(Debug, Clone, Copy)]
pub struct MatchResidual {
    pub e: f64,
    /// `g(E)`; `+inf` when F5 or F1 underflowed below the pole floor.
    pub g: f64,
    pub nudged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn token(&self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFlag {
    /// A degeneracy nudge moved E during evaluation.
    Nudged,
    /// Root recovered from a |W| minimum rather than a sign change;
    /// reported twice (double root).
    Tangential,
    /// Tracking found this root further from its predecessor than the
    /// continuity estimate allows.
    Discontinuity,
}

impl BoundFlag {
    pub fn token(&self) -> &'static str {
        match self {
            BoundFlag::Nudged => "nudged",
            BoundFlag::Tangential => "tangential",
            BoundFlag::Discontinuity => "discontinuity",
        }
    }
}

/// One bound state.
#[derive(Debug, Clone)]
pub struct BoundState {
    pub e: f64,
    pub parity: Parity,
    /// Value of the parity quantization function at the reported
    /// energy.
    pub residual: f64,
    pub flags: Vec<BoundFlag>,
}

/// Values of the even and odd quantization functions at one energy.
#[derive(Debug, Clone, Copy)]
pub struct ParityPair {
    pub even: f64,
    pub odd: f64,
}

/// Spectrum per depth along a tracked curve.
#[derive(Debug, Clone)]
pub struct DepthSample {
    pub ev0: f64,
    pub states: Vec<BoundState>,
    pub error: Option<Error>,
}

#[derive(Debug, Clone)]
pub struct SpectrumCurve {
    pub samples: Vec<DepthSample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalMethod {
    /// First root-count change in the thin zone above E = -m: the
    /// depth where the antiparticle branch appears.
    CountDrop,
    /// First drop by two of the root count in the lower band: the
    /// depth where the particle/antiparticle pair coalesces.
    RootMerge,
}

impl CriticalMethod {
    pub fn token(&self) -> &'static str {
        match self {
            CriticalMethod::CountDrop => "count-drop",
            CriticalMethod::RootMerge => "root-merge",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CriticalPoint {
    pub ev0_cr: f64,
    pub e_cr: f64,
    pub method: CriticalMethod,
    pub bracket: (f64, f64),
}

fn realize(f: LogComplex, pre: Complex64) -> f64 {
    if f.is_zero() {
        return 0.0;
    }
    (f.log_mag + pre.re).exp() * (f.phase + pre.im).cos()
}

fn parity_pair_raw(setup: &PhysicalSetup) -> Result<ParityPair> {
    let params = derive_params(setup)?;
    if !(params.mu.re > 0.0) || params.mu.im != 0.0 {
        return Err(Error::WrongRegime {
            need: "bound",
            detail: format!("E = {} is outside the gap |E| < m = {}", setup.e, setup.m),
        });
    }
    let amps = amplitudes(&params)?;
    let pre = params.mu * params.log_lambda + params.nu * params.log1m_lambda;
    Ok(ParityPair {
        even: realize(amps.f6, pre),
        odd: realize(amps.f2, pre),
    })
}

/// Evaluates both parity quantization functions
/// `W_even = lambda^mu (1-lambda)^nu F6` and
/// `W_odd = lambda^mu (1-lambda)^nu F2` at `setup.e`, which must lie
/// strictly inside the gap. Returns the pair and whether a degeneracy
/// nudge was needed.
///
/// Both products are real for gap energies: writing
/// `F(a2, b2; g2; u) = (1-u)^{-2 nu} F(g2-a2, g2-b2; g2; u)` (an Euler
/// transformation; the parameter set is its own image under
/// `nu -> -nu`) pairs every term with its conjugate once the prefactor
/// is attached. Their zeros are the even and odd bound states.
pub fn parity_pair(setup: &PhysicalSetup) -> Result<(ParityPair, bool)> {
    let (pair, delta) = with_degeneracy_nudge(setup, parity_pair_raw)?;
    Ok((pair, delta != 0.0))
}

/// Evaluates the magnitude residual
/// `g(E) = 1/2 |lambda^(2mu)|^2 (|F6/F5|^2 + |F2/F1|^2) - 1`
/// for `|E| < m - offset`.
///
/// A vanishing F5 or F1 makes the ratio blow up; that is reported as a
/// `+inf` residual rather than an error.
pub fn matching_residual(setup: &PhysicalSetup) -> Result<MatchResidual> {
    setup.validate()?;
    let off = setup.offset_abs();
    if !(setup.e.abs() < setup.m - off) {
        return Err(Error::WrongRegime {
            need: "bound",
            detail: format!(
                "matching residual needs |E| < m - offset, got E = {}",
                setup.e
            ),
        });
    }
    let (g, delta) = with_degeneracy_nudge(setup, |s| {
        let params = derive_params(s)?;
        let amps = amplitudes(&params)?;
        if amps.f5.log_mag < POLE_LOG_FLOOR || amps.f1.log_mag < POLE_LOG_FLOOR {
            return Ok(f64::INFINITY);
        }
        let scale = amps.lambda_pow_2mu.log_mag;
        let r1 = amps.f6.log_mag - amps.f5.log_mag + scale;
        let r2 = amps.f2.log_mag - amps.f1.log_mag + scale;
        Ok(0.5 * ((2.0 * r1).exp() + (2.0 * r2).exp()) - 1.0)
    })?;
    Ok(MatchResidual {
        e: setup.e,
        g,
        nudged: delta != 0.0,
    })
}

fn pick(pair: &ParityPair, parity: Parity) -> f64 {
    match parity {
        Parity::Even => pair.even,
        Parity::Odd => pair.odd,
    }
}

/// Bisects one parity function to [`ENERGY_TOL`]; `flo` is the value at
/// `lo`. Returns the root and whether any evaluation was nudged.
fn bisect_parity(
    template: &PhysicalSetup,
    parity: Parity,
    mut lo: f64,
    mut hi: f64,
    mut flo: f64,
) -> Result<(f64, bool)> {
    let mut nudged = false;
    while hi - lo > ENERGY_TOL {
        let mid = 0.5 * (lo + hi);
        let (pair, n) = parity_pair(&PhysicalSetup { e: mid, ..*template })?;
        nudged |= n;
        let fm = pick(&pair, parity);
        if fm == 0.0 {
            return Ok((mid, nudged));
        }
        if (flo < 0.0) != (fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    Ok((0.5 * (lo + hi), nudged))
}

/// Golden-section minimization of `|W|` for the tangential probe.
fn golden_min_abs(
    template: &PhysicalSetup,
    parity: Parity,
    mut a: f64,
    mut b: f64,
) -> Result<(f64, f64)> {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let eval = |e: f64| -> Result<f64> {
        let (pair, _) = parity_pair(&PhysicalSetup { e, ..*template })?;
        Ok(pick(&pair, parity).abs())
    };
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    while b - a > ENERGY_TOL {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = eval(d)?;
        }
    }
    let x = 0.5 * (a + b);
    Ok((x, eval(x)?))
}

/// Scans `[lo, hi]` on the given nodes and extracts roots of both
/// parity functions: sign changes bisected to [`ENERGY_TOL`], plus
/// (when `probe_tangential` is set) the probe on
/// sub-[`TANGENT_PROBE_TOL`] local minima of |W|: a quadratically
/// merging pair straddles zero without crossing it, and the probe
/// recovers it as a double root. The critical-depth indicator scans
/// leave the probe off so that a pair just past coalescence does not
/// keep counting as two roots.
fn scan_states(template: &PhysicalSetup, nodes: &[f64], probe_tangential: bool) -> Vec<BoundState> {
    let n = nodes.len();
    let mut evens = vec![f64::NAN; n];
    let mut odds = vec![f64::NAN; n];
    let mut nudges = vec![false; n];
    for (j, &e) in nodes.iter().enumerate() {
        if let Ok((pair, nudged)) = parity_pair(&PhysicalSetup { e, ..*template }) {
            evens[j] = pair.even;
            odds[j] = pair.odd;
            nudges[j] = nudged;
        }
    }
    let mut states = Vec::new();
    for (parity, vals) in [(Parity::Even, &evens), (Parity::Odd, &odds)] {
        for j in 0..n - 1 {
            let (v0, v1) = (vals[j], vals[j + 1]);
            if !v0.is_finite() || !v1.is_finite() {
                continue;
            }
            if v0 == 0.0 || (v0 < 0.0) != (v1 < 0.0) {
                if let Ok((root, bn)) = bisect_parity(template, parity, nodes[j], nodes[j + 1], v0)
                {
                    let residual = parity_pair(&PhysicalSetup { e: root, ..*template })
                        .map(|(p, _)| pick(&p, parity))
                        .unwrap_or(f64::NAN);
                    let mut flags = Vec::new();
                    if bn || nudges[j] || nudges[j + 1] {
                        flags.push(BoundFlag::Nudged);
                    }
                    states.push(BoundState {
                        e: root,
                        parity,
                        residual,
                        flags,
                    });
                }
            }
        }
        for j in 1..n - 1 {
            if !probe_tangential {
                break;
            }
            let (vm, v, vp) = (vals[j - 1], vals[j], vals[j + 1]);
            if !(vm.is_finite() && v.is_finite() && vp.is_finite()) {
                continue;
            }
            let same_sign = (vm < 0.0) == (v < 0.0) && (v < 0.0) == (vp < 0.0);
            if !same_sign || v.abs() >= TANGENT_PROBE_TOL {
                continue;
            }
            if !(v.abs() < vm.abs() && v.abs() < vp.abs()) {
                continue;
            }
            if let Ok((e_min, w_min)) = golden_min_abs(template, parity, nodes[j - 1], nodes[j + 1])
            {
                if w_min < TANGENT_ACCEPT_TOL {
                    for _ in 0..2 {
                        states.push(BoundState {
                            e: e_min,
                            parity,
                            residual: w_min,
                            flags: vec![BoundFlag::Tangential],
                        });
                    }
                }
            }
        }
    }
    states.sort_by(|a, b| a.e.total_cmp(&b.e));
    states
}

/// Finds the bound spectrum on a uniform scan of
/// `(-m + offset, m - offset)` with at least 100 grid points. Roots are
/// sorted ascending; an empty list is a valid result.
pub fn find_spectrum(template: &PhysicalSetup, grid: usize) -> Result<Vec<BoundState>> {
    template.validate()?;
    if grid < 100 {
        return Err(Error::InvalidSetup(format!(
            "bound scan grid must be >= 100, got {grid}"
        )));
    }
    let off = template.offset_abs();
    let (lo, hi) = (-template.m + off, template.m - off);
    let nodes: Vec<f64> = (0..grid)
        .map(|j| lo + (hi - lo) * (j as f64) / ((grid - 1) as f64))
        .collect();
    Ok(scan_states(template, &nodes, true))
}

/// Geometric energy nodes crowding the lower gap edge:
/// `E_j = -m + floor * ratio^j` from `floor = 1e-9 m` up to
/// `-m + top_off`.
fn band_nodes(m: f64, top_off: f64) -> Vec<f64> {
    let floor = BAND_FLOOR_REL * m;
    let ratio = (top_off / floor).powf(1.0 / ((BAND_GRID - 1) as f64));
    (0..BAND_GRID)
        .map(|j| -m + floor * ratio.powi(j as i32))
        .collect()
}

fn band_states(template: &PhysicalSetup, ev0: f64, top_off: f64) -> Vec<BoundState> {
    let setup = PhysicalSetup { ev0, ..*template };
    scan_states(&setup, &band_nodes(template.m, top_off), false)
}

/// Tracks the spectrum across a depth range: `steps + 1` depths,
/// warm-started by rescanning a fine window around each previous root
/// so that closely spaced pairs stay resolved between full scans.
///
/// Per-depth failures are recorded in the sample and tracking
/// continues. A root that moved further from its predecessor (same
/// parity) than ten coarse steps times the running slope estimate is
/// flagged discontinuous.
pub fn track_spectrum(
    template: &PhysicalSetup,
    lo: f64,
    hi: f64,
    steps: usize,
    grid: usize,
) -> Result<SpectrumCurve> {
    template.validate()?;
    if steps == 0 || !(hi >= lo) {
        return Err(Error::InvalidSetup(format!(
            "tracking needs steps >= 1 and hi >= lo; got steps={steps}, range {lo}:{hi}"
        )));
    }
    let dv = (hi - lo) / (steps as f64);
    let off = template.offset_abs();
    let gap_step = 2.0 * (template.m - off) / ((grid - 1) as f64);
    let mut samples: Vec<DepthSample> = Vec::with_capacity(steps + 1);
    let mut slope_max: Option<f64> = None;
    for i in 0..=steps {
        let v = lo + dv * (i as f64);
        let setup = PhysicalSetup { ev0: v, ..*template };
        match find_spectrum(&setup, grid) {
            Ok(mut states) => {
                if let Some(prev) = samples.last().filter(|s| s.error.is_none()) {
                    warm_start(&setup, &prev.states, gap_step, &mut states);
                    flag_discontinuities(&prev.states, &mut states, dv, &mut slope_max);
                }
                samples.push(DepthSample {
                    ev0: v,
                    states,
                    error: None,
                });
            }
            Err(e) => samples.push(DepthSample {
                ev0: v,
                states: Vec::new(),
                error: Some(e),
            }),
        }
    }
    Ok(SpectrumCurve { samples })
}

/// Rescans a +-2 coarse-step window around each previous root at 16x
/// density and merges any root the full scan missed.
fn warm_start(
    setup: &PhysicalSetup,
    prev: &[BoundState],
    gap_step: f64,
    states: &mut Vec<BoundState>,
) {
    let off = setup.offset_abs();
    for p in prev {
        let lo = (p.e - 2.0 * gap_step).max(-setup.m + off);
        let hi = (p.e + 2.0 * gap_step).min(setup.m - off);
        if !(hi > lo) {
            continue;
        }
        let nodes: Vec<f64> = (0..64)
            .map(|j| lo + (hi - lo) * (j as f64) / 63.0)
            .collect();
        for s in scan_states(setup, &nodes, true) {
            let known = states
                .iter()
                .any(|k| k.parity == s.parity && (k.e - s.e).abs() < 1e-9);
            if !known {
                states.push(s);
            }
        }
    }
    states.sort_by(|a, b| a.e.total_cmp(&b.e));
}

fn flag_discontinuities(
    prev: &[BoundState],
    states: &mut [BoundState],
    dv: f64,
    slope_max: &mut Option<f64>,
) {
    let mut steepest: f64 = 0.0;
    for s in states.iter_mut() {
        let nearest = prev
            .iter()
            .filter(|p| p.parity == s.parity)
            .map(|p| (p.e - s.e).abs())
            .fold(f64::INFINITY, f64::min);
        if !nearest.is_finite() {
            continue;
        }
        steepest = steepest.max(nearest / dv);
        if let Some(sm) = *slope_max {
            if nearest > 10.0 * dv * sm {
                s.flags.push(BoundFlag::Discontinuity);
            }
        }
    }
    if steepest > 0.0 {
        *slope_max = Some(slope_max.unwrap_or(0.0).max(steepest));
    }
}

/// Locates the critical depth inside `bracket = (lo, hi)`.
///
/// Both methods walk the bracket in 100 coarse steps watching a root
/// count near the lower gap edge, bracket the first triggering
/// transition, and bisect the depth to [`CRITICAL_DEPTH_TOL`]:
///
/// * count-drop: any count change in the thin appearance zone; the
///   reported energy is the lowest zone root just past the transition
///   (the branch enters at E = -m, so this sits within 1e-9 of the
///   edge).
/// * root-merge: count dropping by two or more in the wider band;
///   the reported energy is the midpoint of the closest root pair just
///   before it disappears.
pub fn find_critical(
    template: &PhysicalSetup,
    bracket: (f64, f64),
    method: CriticalMethod,
) -> Result<CriticalPoint> {
    template.validate()?;
    let (lo, hi) = bracket;
    if !(hi > lo) || !(lo >= 0.0) {
        return Err(Error::InvalidSetup(format!(
            "critical bracket must satisfy 0 <= lo < hi, got {lo}:{hi}"
        )));
    }
    let top_off = match method {
        CriticalMethod::CountDrop => APPEARANCE_ZONE_FRACTION * template.m,
        CriticalMethod::RootMerge => MERGE_BAND_FRACTION * template.m,
    };
    let count = |v: f64| band_states(template, v, top_off).len();
    let triggered = |prev: usize, cur: usize| match method {
        CriticalMethod::CountDrop => cur != prev,
        CriticalMethod::RootMerge => cur + 2 <= prev,
    };

    let mut c_prev = count(lo);
    let mut v_prev = lo;
    for j in 1..=COARSE_DEPTH_STEPS {
        let v = lo + (hi - lo) * (j as f64) / (COARSE_DEPTH_STEPS as f64);
        let c = count(v);
        if triggered(c_prev, c) {
            let (mut blo, mut bhi) = (v_prev, v);
            while bhi - blo > CRITICAL_DEPTH_TOL {
                let mid = 0.5 * (blo + bhi);
                if triggered(c_prev, count(mid)) {
                    bhi = mid;
                } else {
                    blo = mid;
                }
            }
            let e_cr = match method {
                CriticalMethod::CountDrop => {
                    let roots = band_states(template, bhi, top_off);
                    roots.first().map(|s| s.e).unwrap_or(f64::NAN)
                }
                CriticalMethod::RootMerge => {
                    let roots = band_states(template, blo, top_off);
                    closest_pair_midpoint(&roots).unwrap_or(f64::NAN)
                }
            };
            return Ok(CriticalPoint {
                ev0_cr: bhi,
                e_cr,
                method,
                bracket,
            });
        }
        c_prev = c;
        v_prev = v;
    }
    Err(Error::NoCoalescence { lo, hi })
}

fn closest_pair_midpoint(roots: &[BoundState]) -> Option<f64> {
    let mut best: Option<(f64, f64)> = None;
    for w in roots.windows(2) {
        let gap = w[1].e - w[0].e;
        if best.map_or(true, |(g, _)| gap < g) {
            best = Some((gap, 0.5 * (w[0].e + w[1].e)));
        }
    }
    best.map(|(_, mid)| mid)
}
