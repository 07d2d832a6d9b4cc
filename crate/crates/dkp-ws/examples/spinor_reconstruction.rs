//! Rebuilds the full ten-component content of a spin-1 DKP plane wave
//! from the three reduced components the solver actually propagates.

use dkp_ws::algebra::{reconstruct_spinor, ReducedSolution};
use num_complex::Complex64;

fn main() {
    let (m, e, ev) = (1.0_f64, 2.5, 0.5);
    let k = ((e - ev) * (e - ev) - m * m).sqrt();

    // Transverse plane wave psi ~ (0, 1, 1) exp(ikz) at z = 0.
    let psi = [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
    ];
    let dpsi = [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, k),
        Complex64::new(0.0, k),
    ];

    let red = ReducedSolution {
        psi,
        dpsi_dz: dpsi,
        e,
        e_v: ev,
        m,
    };
    let (phi, theta) = reconstruct_spinor(&red).expect("reconstruct");

    println!("plane wave with E = {e}, eV = {ev}, k = {k:.6}");
    println!("{:>4}  {:>22}  {:>22}", "i", "phi_i", "theta_i");
    for i in 0..3 {
        println!(
            "{i:>4}  {:>10.6} {:+.6}i  {:>10.6} {:+.6}i",
            phi[i].re, phi[i].im, theta[i].re, theta[i].im
        );
    }

    // For this wave phi = ((E - eV)/m) psi and theta = (i/m) psi',
    // so |theta| / |phi| = k / (E - eV).
    let ratio = theta[1].norm() / phi[1].norm();
    println!("\n|theta|/|phi| = {ratio:.9}, k/(E - eV) = {:.9}", k / (e - ev));
}
