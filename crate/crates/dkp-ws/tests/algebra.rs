//! Exact checks on the beta-matrix representations and the spinor
//! reconstruction map.

mod common;

use common::rel_err_c;
use dkp_ws::algebra::{
    build_betas, reconstruct_spinor, verify_algebra, BetaSet, GaussInt, ReducedSolution, Spin,
};
use dkp_ws::Error;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn both_representations_satisfy_all_64_triples() {
    for (spin, dim) in [(Spin::Zero, 5), (Spin::One, 10)] {
        let betas = build_betas(spin);
        assert_eq!(betas.beta[0].dim(), dim);
        let violations = verify_algebra(&betas);
        assert!(
            violations.is_empty(),
            "{spin:?} representation violates {} triples: {:?}",
            violations.len(),
            violations
        );
    }
}

#[test]
fn beta_matrices_are_traceless() {
    for spin in [Spin::Zero, Spin::One] {
        let betas = build_betas(spin);
        for (mu, b) in betas.beta.iter().enumerate() {
            assert!(b.trace().is_zero(), "{spin:?} beta^{mu} has nonzero trace");
        }
    }
}

#[test]
fn layout_reports_where_the_z_row_sits() {
    assert!(build_betas(Spin::Zero).layout().contains("index 4"));
    assert!(build_betas(Spin::One).layout().contains("index 9"));
}

fn mutated(spin: Spin, mu: usize, row: usize, col: usize, delta: GaussInt) -> BetaSet {
    let mut betas = build_betas(spin);
    let old = betas.beta[mu].get(row, col);
    betas.beta[mu].set(row, col, old + delta);
    betas
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// The representations are rigid: bump any single entry by any
    /// nonzero Gaussian integer and some triple breaks.
    #[test]
    fn any_single_entry_mutation_violates_the_algebra(
        spin_one in any::<bool>(),
        mu in 0usize..4,
        row_seed in any::<u32>(),
        col_seed in any::<u32>(),
        dre in -2i64..3,
        dim_part in -2i64..3,
    ) {
        prop_assume!(dre != 0 || dim_part != 0);
        let spin = if spin_one { Spin::One } else { Spin::Zero };
        let dim = if spin_one { 10 } else { 5 };
        let row = row_seed as usize % dim;
        let col = col_seed as usize % dim;
        let betas = mutated(spin, mu, row, col, GaussInt::new(dre, dim_part));
        let violations = verify_algebra(&betas);
        prop_assert!(
            !violations.is_empty(),
            "mutation of {spin:?} beta^{mu} at ({row},{col}) went undetected"
        );
    }
}

#[test]
fn reconstruction_of_a_plane_wave_has_the_asymptotic_column_shape() {
    let (m, e, k) = (1.0_f64, 2.5, (2.5_f64 * 2.5 - 1.0).sqrt());
    let amp = [c(0.8, 0.1), c(0.0, 0.0), c(-0.3, 0.6)];
    let red = ReducedSolution {
        psi: amp,
        dpsi_dz: [
            c(0.0, k) * amp[0],
            c(0.0, k) * amp[1],
            c(0.0, k) * amp[2],
        ],
        e,
        e_v: 0.0,
        m,
    };
    let (phi, theta) = reconstruct_spinor(&red).expect("reconstruction");
    for j in 0..3 {
        let want_phi = (e / m) * amp[j];
        let want_theta = (-k / m) * amp[j];
        assert!((phi[j] - want_phi).norm() <= 1e-15);
        assert!((theta[j] - want_theta).norm() <= 1e-15);
    }
}

#[test]
fn reconstruction_at_rest_collapses_to_the_mass_column() {
    let red = ReducedSolution {
        psi: [c(1.0, 0.0), c(0.0, 1.0), c(0.5, -0.5)],
        dpsi_dz: [c(0.0, 0.0); 3],
        e: 1.0,
        e_v: 0.0,
        m: 1.0,
    };
    let (phi, theta) = reconstruct_spinor(&red).expect("reconstruction");
    assert_eq!(phi, red.psi);
    assert_eq!(theta, [c(0.0, 0.0); 3]);
}

#[test]
fn reconstruction_requires_positive_mass() {
    let red = ReducedSolution {
        psi: [c(1.0, 0.0); 3],
        dpsi_dz: [c(0.0, 0.0); 3],
        e: 1.0,
        e_v: 0.0,
        m: 0.0,
    };
    match reconstruct_spinor(&red) {
        Err(Error::InvalidSetup(_)) => {}
        other => panic!("expected invalid setup, got {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The reconstruction map is linear in the reduced solution.
    #[test]
    fn reconstruction_is_linear(
        p1 in (-2.0f64..2.0, -2.0f64..2.0),
        p2 in (-2.0f64..2.0, -2.0f64..2.0),
        d1 in (-2.0f64..2.0, -2.0f64..2.0),
        d2 in (-2.0f64..2.0, -2.0f64..2.0),
        s in (-3.0f64..3.0, -3.0f64..3.0),
        e in -2.0f64..2.0,
        ev in -1.0f64..1.0,
    ) {
        let scale = c(s.0, s.1);
        let base = ReducedSolution {
            psi: [c(p1.0, p1.1), c(p2.0, p2.1), c(0.3, 0.0)],
            dpsi_dz: [c(d1.0, d1.1), c(d2.0, d2.1), c(0.0, -0.4)],
            e,
            e_v: ev,
            m: 1.0,
        };
        let scaled = ReducedSolution {
            psi: base.psi.map(|w| scale * w),
            dpsi_dz: base.dpsi_dz.map(|w| scale * w),
            ..base
        };
        let (phi, theta) = reconstruct_spinor(&base).unwrap();
        let (phi_s, theta_s) = reconstruct_spinor(&scaled).unwrap();
        for j in 0..3 {
            if phi[j].norm() > 1e-12 {
                prop_assert!(rel_err_c(phi_s[j], scale * phi[j]) <= 1e-12);
            }
            if theta[j].norm() > 1e-12 {
                prop_assert!(rel_err_c(theta_s[j], scale * theta[j]) <= 1e-12);
            }
        }
    }
}
