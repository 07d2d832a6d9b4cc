//! Samples the Woods-Saxon well for a few edge thicknesses and shows
//! the sharp square edge emerging as r shrinks.

fn well(z: f64, a: f64, r: f64, ev0: f64) -> f64 {
    -ev0 / (1.0 + ((z.abs() - a) / r).exp())
}

fn main() {
    let a = 2.0;
    let ev0 = 1.0;
    let radii = [0.5, 0.1, 0.01];

    println!("V(z) for a = {a}, eV0 = {ev0}");
    print!("{:>8}", "z");
    for r in radii {
        print!("  {:>12}", format!("r={r}"));
    }
    println!();

    for j in 0..=24 {
        let z = -6.0 + 12.0 * (j as f64) / 24.0;
        print!("{z:>8.2}");
        for r in radii {
            print!("  {:>12.6}", well(z, a, r, ev0));
        }
        println!();
    }

    // Depth at the edge itself is half the plateau value for every r.
    for r in radii {
        println!("V(a)/V(0) at r={r}: {:.6}", well(a, a, r, ev0) / well(0.0, a, r, ev0));
    }
}
