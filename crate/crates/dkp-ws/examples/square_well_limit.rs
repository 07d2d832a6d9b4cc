//! Convergence onto the square well as the edge thickness shrinks.
//! The smooth-well transmission is compared against the elementary
//! closed form at each r; the deviation should fall with r.

use dkp_ws::scattering::{evaluate_rt, PhysicalSetup};
use dkp_ws::SquareWell;

fn main() {
    let (m, a, ev0) = (1.0, 2.0, 5.0);
    let square = SquareWell::new(m, a, ev0).expect("well");

    println!("max |T_ws - T_square| over E in [-4, -2.2] u [1.2, 3]  (a = {a}, eV0 = {ev0})");
    for r in [0.1, 0.03, 0.01, 0.003, 0.001, 0.0003, 0.0001] {
        let mut worst: f64 = 0.0;
        let mut energies: Vec<f64> = Vec::new();
        for j in 0..=60 {
            energies.push(-4.0 + 1.8 * (j as f64) / 60.0);
            energies.push(1.2 + 1.8 * (j as f64) / 60.0);
        }
        for &e in &energies {
            let setup = PhysicalSetup { r, e, ..PhysicalSetup::new(m, a, r, ev0, 0.0) };
            let t_ws = match evaluate_rt(&setup) {
                Ok(p) => p.t_coef,
                Err(_) => continue,
            };
            let t_sq = square.transmission(e).expect("square T");
            worst = worst.max((t_ws - t_sq).abs());
        }
        println!("  r = {r:>7}   {worst:.3e}");
    }

    println!("\nbound levels at eV0 = 1, a = 4, r = 4e-4 against the square spectrum:");
    let smooth = dkp_ws::bound::find_spectrum(&PhysicalSetup::new(m, 4.0, 4e-4, 1.0, 0.0), 2000)
        .expect("spectrum");
    let sharp = SquareWell::new(m, 4.0, 1.0).expect("well").bound_energies();
    for (st, sq) in smooth.iter().zip(&sharp) {
        println!(
            "  {:>5}  E_ws = {:>12.9}   E_square = {:>12.9}   diff = {:.2e}",
            st.parity.token(),
            st.e,
            sq,
            (st.e - sq).abs()
        );
    }
}
