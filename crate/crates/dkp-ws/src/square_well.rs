//! Sharp square well: closed-form transmission, a matrix-matching
//! cross-check, and the transcendental bound spectrum.
//!
//! The Woods-Saxon well collapses onto `V(z) = -V0` for `|z| <= a` as
//! `r -> 0`, and there everything is elementary. These closed forms
//! anchor the smooth-well solver: its results must converge onto them
//! in the sharp-edge limit.

use num_complex::Complex64;

use crate::{Error, Result};

/// Bound energies are bisected to this width.
pub const SQUARE_ROOT_TOL: f64 = 1e-12;

/// Sharp well of depth `v0 >= 0` on `|z| <= a`.
#[derive(Debug, Clone, Copy)]
pub struct SquareWell {
    pub m: f64,
    pub a: f64,
    pub v0: f64,
}

impl SquareWell {
    pub fn new(m: f64, a: f64, v0: f64) -> Result<Self> {
        if !(m > 0.0) || !(a > 0.0) || !(v0 >= 0.0) {
            return Err(Error::InvalidSetup(format!(
                "square well needs m > 0, a > 0, v0 >= 0; got m={m}, a={a}, v0={v0}"
            )));
        }
        Ok(SquareWell { m, a, v0 })
    }

    /// Transmission coefficient
    ///
    /// ```text
    /// T = [1 + ((k^2 - p^2)^2 / (4 k^2 p^2)) sin^2(2 p a)]^(-1)
    /// ```
    ///
    /// with `k^2 = E^2 - m^2` and `p^2 = (E + V0)^2 - m^2`. The inner
    /// momentum may be imaginary (the Klein-range window); the formula
    /// is evaluated complex and the combination is real either way,
    /// `sin^2` turning into `-sinh^2`.
    pub fn transmission(&self, e: f64) -> Result<f64> {
        let k2 = e * e - self.m * self.m;
        if !(k2 > 0.0) {
            return Err(Error::WrongRegime {
                need: "scattering",
                detail: format!("square-well transmission needs |E| > m, got E = {e}"),
            });
        }
        let p2 = (e + self.v0) * (e + self.v0) - self.m * self.m;
        if p2 == 0.0 {
            return Err(Error::ThresholdEnergy);
        }
        let p = Complex64::new(p2, 0.0).sqrt();
        let s = (2.0 * self.a * p).sin();
        let blocking = (k2 - p2) * (k2 - p2) / (4.0 * k2 * p2) * (s * s).re;
        if !blocking.is_finite() {
            // sinh overflow deep in the evanescent window: total blocking
            return Ok(0.0);
        }
        Ok(1.0 / (1.0 + blocking))
    }

    /// Transmission by brute-force wavefunction matching: plane waves
    /// in the three regions, continuity of value and derivative at
    /// both edges, 4x4 complex solve for the transmitted amplitude.
    /// Slower and less accurate than the closed form, kept as an
    /// independent check on it.
    pub fn transmission_matched(&self, e: f64) -> Result<f64> {
        let k2 = e * e - self.m * self.m;
        if !(k2 > 0.0) {
            return Err(Error::WrongRegime {
                need: "scattering",
                detail: format!("square-well transmission needs |E| > m, got E = {e}"),
            });
        }
        let p2 = (e + self.v0) * (e + self.v0) - self.m * self.m;
        if p2 == 0.0 {
            return Err(Error::ThresholdEnergy);
        }
        let k = Complex64::new(k2, 0.0).sqrt();
        let p = Complex64::new(p2, 0.0).sqrt();
        let i = Complex64::new(0.0, 1.0);
        let a = self.a;
        let eka = (i * k * a).exp();
        let emka = (-i * k * a).exp();
        let epa = (i * p * a).exp();
        let empa = (-i * p * a).exp();

        // Unknowns (B, C, D, F): reflected, two inner, transmitted;
        // incident amplitude 1. Continuity of psi and psi' at z = -a
        // and z = +a.
        let zero = Complex64::new(0.0, 0.0);
        let mut mat = [
            [eka, -empa, -epa, zero],
            [-i * k * eka, -i * p * empa, i * p * epa, zero],
            [zero, epa, empa, -eka],
            [zero, i * p * epa, -i * p * empa, -i * k * eka],
        ];
        let mut rhs = [-emka, -i * k * emka, zero, zero];
        solve4(&mut mat, &mut rhs)?;
        Ok(rhs[3].norm_sqr())
    }

    /// Even-parity quantization function `p sin(pa) - kappa cos(pa)`
    /// with `kappa = sqrt(m^2 - E^2)`; odd parity uses
    /// `p cos(pa) + kappa sin(pa)`. Zeros are the bound energies.
    fn quantization(&self, e: f64, even: bool) -> f64 {
        let kappa = (self.m * self.m - e * e).sqrt();
        let p = ((e + self.v0) * (e + self.v0) - self.m * self.m).sqrt();
        let pa = p * self.a;
        if even {
            p * pa.sin() - kappa * pa.cos()
        } else {
            p * pa.cos() + kappa * pa.sin()
        }
    }

    /// Bound energies of one parity, ascending.
    ///
    /// The E-domain is `(max(-m, m - V0), m)`, where both `kappa` and
    /// the inner momentum are real. It is partitioned at the energies
    /// where `p a` crosses a multiple of `pi/2`; each segment holds at
    /// most one root of either parity function (`tan`/`cot` are
    /// monotone per branch while `kappa/p` is strictly decreasing), so
    /// endpoint signs bracket every root.
    pub fn bound_energies_parity(&self, even: bool) -> Vec<f64> {
        let m = self.m;
        let tiny = 1e-13 * m;
        let lo = (-m).max(m - self.v0) + tiny;
        let hi = m - tiny;
        if !(hi > lo) {
            return Vec::new();
        }
        let p_of = |e: f64| ((e + self.v0) * (e + self.v0) - m * m).sqrt();
        let e_of_p = |p: f64| -self.v0 + (m * m + p * p).sqrt();
        let mut cuts = vec![lo];
        let mut j = 1usize;
        loop {
            let p_target = (j as f64) * std::f64::consts::FRAC_PI_2 / self.a;
            if p_target >= p_of(hi) {
                break;
            }
            let e_cut = e_of_p(p_target);
            if e_cut > lo && e_cut < hi {
                cuts.push(e_cut);
            }
            j += 1;
        }
        cuts.push(hi);

        let mut roots = Vec::new();
        for w in cuts.windows(2) {
            let (mut a_e, mut b_e) = (w[0], w[1]);
            let mut fa = self.quantization(a_e, even);
            let fb = self.quantization(b_e, even);
            if fa == 0.0 {
                roots.push(a_e);
                continue;
            }
            if (fa < 0.0) == (fb < 0.0) {
                continue;
            }
            while b_e - a_e > SQUARE_ROOT_TOL {
                let mid = 0.5 * (a_e + b_e);
                let fm = self.quantization(mid, even);
                if fm == 0.0 {
                    a_e = mid;
                    b_e = mid;
                    break;
                }
                if (fa < 0.0) != (fm < 0.0) {
                    b_e = mid;
                } else {
                    a_e = mid;
                    fa = fm;
                }
            }
            roots.push(0.5 * (a_e + b_e));
        }
        roots
    }

    /// All bound energies, ascending, parities interleaved.
    pub fn bound_energies(&self) -> Vec<f64> {
        let mut all = self.bound_energies_parity(true);
        all.extend(self.bound_energies_parity(false));
        all.sort_by(f64::total_cmp);
        all
    }
}

/// In-place Gaussian elimination with partial pivoting for the 4x4
/// matching system.
fn solve4(mat: &mut [[Complex64; 4]; 4], rhs: &mut [Complex64; 4]) -> Result<()> {
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| mat[i][col].norm().total_cmp(&mat[j][col].norm()))
            .unwrap();
        if mat[pivot][col].norm() == 0.0 {
            return Err(Error::InvalidSetup(
                "singular matching system in square-well oracle".into(),
            ));
        }
        mat.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..4 {
            let f = mat[row][col] / mat[col][col];
            for c in col..4 {
                let v = mat[col][c];
                mat[row][c] -= f * v;
            }
            let r = rhs[col];
            rhs[row] -= f * r;
        }
    }
    for col in (0..4).rev() {
        let mut v = rhs[col];
        for c in col + 1..4 {
            v -= mat[col][c] * rhs[c];
        }
        rhs[col] = v / mat[col][col];
    }
    Ok(())
}
