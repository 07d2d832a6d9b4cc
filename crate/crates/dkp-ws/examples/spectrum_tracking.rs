//! Levels diving through the gap as the well deepens. Each level
//! enters at E = m, falls monotonically, and the deepest pair merges
//! and leaves the spectrum once the depth passes the supercritical
//! point near eV0 = 2m.

use dkp_ws::bound::track_spectrum;
use dkp_ws::scattering::PhysicalSetup;

fn main() {
    let template = PhysicalSetup::new(1.0, 2.0, 0.01, 0.0, 0.0);
    let curve = track_spectrum(&template, 0.0, 3.0, 30, 1200).expect("track");

    println!("a = {}, r = {}: levels vs depth", template.a, template.r);
    println!("{:>6}  {:>5}  levels", "eV0", "count");
    for sample in &curve.samples {
        if let Some(err) = &sample.error {
            println!("{:>6.2}  {:>5}  error: {err}", sample.ev0, "-");
            continue;
        }
        let levels: Vec<String> = sample
            .states
            .iter()
            .map(|s| format!("{:+.4}{}", s.e, if s.flags.is_empty() { "" } else { "*" }))
            .collect();
        println!("{:>6.2}  {:>5}  {}", sample.ev0, sample.states.len(), levels.join("  "));
    }

    let max_count = curve.samples.iter().map(|s| s.states.len()).max().unwrap_or(0);
    let final_count = curve.samples.last().map(|s| s.states.len()).unwrap_or(0);
    println!("\npeak level count {max_count}, count at eV0 = 3: {final_count}");
    println!("(* marks states the tracker flagged: nudged, tangential, or discontinuity)");
}
