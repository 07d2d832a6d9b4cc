//! Transmission as a function of well depth at fixed energy: the
//! blocking window above threshold and the resonance comb beyond it.

use dkp_ws::scattering::{find_resonances, sweep, PhysicalSetup, SweepVariable};

fn main() {
    // A probe in the lower continuum, thin edges.
    let template = PhysicalSetup::new(1.0, 2.0, 0.0003, 0.0, -2.0);
    let table = sweep(&template, SweepVariable::Depth, 0.0, 10.0, 1000).expect("sweep");

    println!("eV0 sweep at E = {}, a = {}, r = {}", template.e, template.a, template.r);
    println!("{:>8}  {:>12}  {:>12}", "eV0", "R", "T");
    for row in table.rows.iter().step_by(50) {
        match (row.r_coef, row.t_coef) {
            (Some(r), Some(t)) => println!("{:>8.2}  {:>12.6}  {:>12.6}", row.x, r, t),
            _ => println!("{:>8.2}  {:>12}  {:>12}", row.x, "-", "-"),
        }
    }

    let peaks = find_resonances(&table, 0.5);
    println!("\ntransmission resonances (T > 0.5 after refinement):");
    for p in &peaks {
        println!("  eV0 = {:>9.5}   T = {:.9}", p.x, p.t);
    }
    println!("count: {}", peaks.len());
}
