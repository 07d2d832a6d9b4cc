//! DKP beta matrices and exact verification of the trilinear algebra
//!
//! ```text
//! b^mu b^nu b^la + b^la b^nu b^mu = g^{mu nu} b^la + g^{nu la} b^mu,
//! g = diag(1, -1, -1, -1)
//! ```
//!
//! Every entry of both representations is a Gaussian integer, so the
//! identity is checked in exact arithmetic and the verdict is binary:
//! there is no tolerance to tune.

use num_complex::Complex64;

use crate::{Error, Result};

/// Gaussian integer `re + im * i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl std::ops::Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl std::ops::Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl std::ops::Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl std::ops::Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

/// Dense square matrix over Gaussian integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussMatrix {
    dim: usize,
    data: Vec<GaussInt>,
}

impl GaussMatrix {
    pub fn zeros(dim: usize) -> Self {
        GaussMatrix {
            dim,
            data: vec![GaussInt::ZERO; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> GaussInt {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: GaussInt) {
        self.data[row * self.dim + col] = v;
    }

    pub fn mul(&self, rhs: &GaussMatrix) -> GaussMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = GaussMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &GaussMatrix) -> GaussMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(&rhs.data) {
            *o = *o + *r;
        }
        out
    }

    /// Scales by an ordinary integer (metric entries are +1 or -1).
    pub fn scale(&self, factor: i64) -> GaussMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = GaussInt::new(factor, 0) * *v;
        }
        out
    }

    pub fn trace(&self) -> GaussInt {
        (0..self.dim).fold(GaussInt::ZERO, |acc, i| acc + self.get(i, i))
    }

    /// Index pairs of all nonzero entries.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self.get(i, j).is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Zero,
    One,
}

/// The four beta matrices of one representation.
#[derive(Debug, Clone)]
pub struct BetaSet {
    pub spin: Spin,
    pub beta: [GaussMatrix; 4],
}

/// Minkowski metric diag(1, -1, -1, -1).
pub const METRIC: [i64; 4] = [1, -1, -1, -1];

/// Builds the 5-dim (spin 0) or 10-dim (spin 1) representation.
///
/// Spin 0 orders components as an upper doublet followed by a spatial
/// triplet; the only nonzero blocks are the symmetric theta block in
/// beta^0 and the rho / -rho^T pair in each beta^i.
///
/// Spin 1 orders components as (phi; A_1..A_3; B_1..B_3; C_1..C_3),
/// with the C_3 row last (index 9). beta^0 carries identity blocks
/// between the A and B triplets; beta^i couples phi to B_i and carries
/// `-i s_i` blocks between the A and C triplets, with `s_i` the
/// standard spin-1 matrices.
pub fn build_betas(spin: Spin) -> BetaSet {
    match spin {
        Spin::Zero => build_spin_zero(),
        Spin::One => build_spin_one(),
    }
}

fn build_spin_zero() -> BetaSet {
    let one = GaussInt::ONE;
    let mut b0 = GaussMatrix::zeros(5);
    b0.set(0, 1, one);
    b0.set(1, 0, one);

    // rho^i is the 2x3 block with a single -1 in row 0, column i-1;
    // the lower-left block is -rho^T.
    let mut betas = vec![b0];
    for i in 0..3 {
        let mut b = GaussMatrix::zeros(5);
        b.set(0, 2 + i, -one);
        b.set(2 + i, 0, one);
        betas.push(b);
    }
    BetaSet {
        spin: Spin::Zero,
        beta: betas.try_into().unwrap(),
    }
}

/// Standard spin-1 matrices `s_1, s_2, s_3` with entries in {0, +-i}.
fn spin_one_s(i: usize) -> GaussMatrix {
    let plus_i = GaussInt::new(0, 1);
    let minus_i = GaussInt::new(0, -1);
    let mut s = GaussMatrix::zeros(3);
    match i {
        0 => {
            s.set(1, 2, minus_i);
            s.set(2, 1, plus_i);
        }
        1 => {
            s.set(0, 2, plus_i);
            s.set(2, 0, minus_i);
        }
        2 => {
            s.set(0, 1, minus_i);
            s.set(1, 0, plus_i);
        }
        _ => unreachable!(),
    }
    s
}

fn build_spin_one() -> BetaSet {
    let one = GaussInt::ONE;
    let minus_i = GaussInt::new(0, -1);

    let mut b0 = GaussMatrix::zeros(10);
    for i in 0..3 {
        b0.set(1 + i, 4 + i, one);
        b0.set(4 + i, 1 + i, one);
    }

    let mut betas = vec![b0];
    for i in 0..3 {
        let mut b = GaussMatrix::zeros(10);
        b.set(0, 4 + i, one);
        b.set(4 + i, 0, -one);
        let s = spin_one_s(i);
        for r in 0..3 {
            for c in 0..3 {
                let v = minus_i * s.get(r, c);
                b.set(1 + r, 7 + c, v);
                b.set(7 + r, 1 + c, v);
            }
        }
        betas.push(b);
    }
    BetaSet {
        spin: Spin::One,
        beta: betas.try_into().unwrap(),
    }
}

impl BetaSet {
    /// Human-readable component layout, including where the third
    /// spatial row sits.
    pub fn layout(&self) -> &'static str {
        match self.spin {
            Spin::Zero => "upper doublet (rows 0-1), spatial triplet (rows 2-4); third spatial row is index 4",
            Spin::One => "phi (row 0), A_1..A_3 (rows 1-3), B_1..B_3 (rows 4-6), C_1..C_3 (rows 7-9); C_3 row is index 9",
        }
    }
}

/// Checks the trilinear identity over all 64 index triples.
///
/// Returns the violated `(mu, nu, lambda)` triples; an empty list means
/// the representation satisfies the algebra exactly.
pub fn verify_algebra(betas: &BetaSet) -> Vec<(usize, usize, usize)> {
    let b = &betas.beta;
    let mut violations = Vec::new();
    for mu in 0..4 {
        for nu in 0..4 {
            for la in 0..4 {
                let lhs = b[mu].mul(&b[nu]).mul(&b[la]).add(&b[la].mul(&b[nu]).mul(&b[mu]));
                let mut rhs = GaussMatrix::zeros(b[0].dim());
                if mu == nu {
                    rhs = rhs.add(&b[la].scale(METRIC[mu]));
                }
                if nu == la {
                    rhs = rhs.add(&b[mu].scale(METRIC[nu]));
                }
                if lhs != rhs {
                    violations.push((mu, nu, la));
                }
            }
        }
    }
    violations
}

/// One sample of the reduced Klein-Gordon solution: the surviving
/// triplet `Psi`, its z-derivative, and the local kinematics.
#[derive(Debug, Clone, Copy)]
pub struct ReducedSolution {
    pub psi: [Complex64; 3],
    pub dpsi_dz: [Complex64; 3],
    /// Total energy.
    pub e: f64,
    /// Local potential value `e V(z)`.
    pub e_v: f64,
    pub m: f64,
}

/// Rebuilds the remaining spinor triplets from a reduced solution:
///
/// ```text
/// Phi   = ((E - eV)/m) Psi
/// Theta = (i/m) dPsi/dz
/// ```
///
/// For a free plane wave `Psi ~ exp(ikz)` this reproduces the
/// asymptotic column structure with `Theta = (-k/m) Psi`.
pub fn reconstruct_spinor(red: &ReducedSolution) -> Result<([Complex64; 3], [Complex64; 3])> {
    if !(red.m > 0.0) {
        return Err(Error::InvalidSetup(format!(
            "reconstruction requires m > 0, got m = {}",
            red.m
        )));
    }
    let ratio = (red.e - red.e_v) / red.m;
    let i_over_m = Complex64::new(0.0, 1.0 / red.m);
    let phi = [ratio * red.psi[0], ratio * red.psi[1], ratio * red.psi[2]];
    let theta = [
        i_over_m * red.dpsi_dz[0],
        i_over_m * red.dpsi_dz[1],
        i_over_m * red.dpsi_dz[2],
    ];
    Ok((phi, theta))
}
