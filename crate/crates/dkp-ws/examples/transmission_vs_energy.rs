//! Transmission across both continua at a fixed supercritical depth.
//! The band |E| < m plus the shifted band |E + eV0| < m are skipped
//! automatically; what remains are the upper continuum E > m and the
//! Klein range below -eV0 + m where the well is transparent only at
//! resonant energies.

use dkp_ws::scattering::{find_resonances, sweep, PhysicalSetup, SweepVariable};

fn main() {
    let template = PhysicalSetup::new(1.0, 4.0, 0.0003, 4.0, 0.0);
    let table = sweep(&template, SweepVariable::Energy, -8.0, 4.0, 1200).expect("sweep");

    let evaluated = table.rows.iter().filter(|r| r.t_coef.is_some()).count();
    let skipped = table.rows.len() - evaluated;
    println!(
        "E sweep at eV0 = {}, a = {}: {} points evaluated, {} inside threshold bands",
        template.ev0, template.a, evaluated, skipped
    );

    println!("{:>8}  {:>12}  {:>12}  flags", "E", "R", "T");
    for row in table.rows.iter().step_by(60) {
        let flags: Vec<&str> = row.flags.iter().map(|f| f.token()).collect();
        match (row.r_coef, row.t_coef) {
            (Some(r), Some(t)) => {
                println!("{:>8.2}  {:>12.6}  {:>12.6}  {}", row.x, r, t, flags.join(";"))
            }
            _ => println!("{:>8.2}  {:>12}  {:>12}  {}", row.x, "-", "-", flags.join(";")),
        }
    }

    let peaks = find_resonances(&table, 0.9);
    println!("\nnear-perfect transparency (T > 0.9):");
    for p in &peaks {
        let side = if p.x > 0.0 { "upper continuum" } else { "Klein range" };
        println!("  E = {:>9.5}   T = {:.9}   ({side})", p.x, p.t);
    }
}
