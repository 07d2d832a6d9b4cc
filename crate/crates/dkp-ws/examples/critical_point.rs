//! The two readings of the supercritical depth, located side by side.
//!
//! count-drop: the depth where the root count in a thin zone above
//! E = -m first changes, i.e. where the antiparticle branch appears.
//! root-merge: the depth where the particle and antiparticle roots
//! coalesce pairwise and leave the gap together.
//! The first always precedes the second.

use dkp_ws::bound::{find_critical, CriticalMethod};
use dkp_ws::scattering::PhysicalSetup;

fn main() {
    let template = PhysicalSetup::new(1.0, 1.0, 0.00015, 0.0, 0.0);

    let appear = find_critical(&template, (1.9, 2.1), CriticalMethod::CountDrop).expect("count-drop");
    println!(
        "count-drop:  eV0_cr = {:.10}   E_cr = {:.10}",
        appear.ev0_cr, appear.e_cr
    );

    let merge = find_critical(&template, (1.9, 2.3), CriticalMethod::RootMerge).expect("root-merge");
    println!(
        "root-merge:  eV0_cr = {:.10}   E_cr = {:.10}",
        merge.ev0_cr, merge.e_cr
    );

    assert!(appear.ev0_cr < merge.ev0_cr);
    println!("\nbranch appearance precedes coalescence, gap = {:.6}", merge.ev0_cr - appear.ev0_cr);

    // Sharper edges push the appearance depth toward 2m exactly.
    println!("\nappearance depth vs edge thickness at a = 4:");
    for r in [0.0003, 0.0001, 0.000015] {
        let t = PhysicalSetup::new(1.0, 4.0, r, 0.0, 0.0);
        let p = find_critical(&t, (1.9, 2.1), CriticalMethod::CountDrop).expect("count-drop");
        println!("  r = {r:>9}   eV0_cr = {:.10}", p.ev0_cr);
    }
}
