//! Bound levels in the mass gap at a single depth, with parities and
//! quantization residuals.

use dkp_ws::bound::find_spectrum;
use dkp_ws::scattering::PhysicalSetup;

fn main() {
    let template = PhysicalSetup::new(1.0, 4.0, 0.0004, 1.0, 0.0);
    let states = find_spectrum(&template, 2000).expect("spectrum");

    println!(
        "bound spectrum at a = {}, r = {}, eV0 = {}",
        template.a, template.r, template.ev0
    );
    println!("{:>3}  {:>6}  {:>16}  {:>10}  flags", "n", "parity", "E", "residual");
    for (n, st) in states.iter().enumerate() {
        let flags: Vec<&str> = st.flags.iter().map(|f| f.token()).collect();
        println!(
            "{n:>3}  {:>6}  {:>16.12}  {:>10.2e}  {}",
            st.parity.token(),
            st.e,
            st.residual,
            flags.join(";")
        );
    }

    // Parities alternate up the ladder, even first: the well is
    // symmetric, so the ground state has no node.
    let tokens: Vec<&str> = states.iter().map(|s| s.parity.token()).collect();
    println!("\nparity ladder: {}", tokens.join(" "));
}
