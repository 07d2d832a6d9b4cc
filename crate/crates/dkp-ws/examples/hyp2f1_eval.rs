//! Gauss hypergeometric evaluation across its regimes: the defining
//! series, the connection formula near z = 1, and the caller-supplied
//! log(1 - z) path that keeps accuracy when 1 - z is exponentially
//! small and cannot be formed in floating point.

use dkp_ws::{hyp2f1, Hyp2F1Args};
use num_complex::Complex64;

fn show(label: &str, args: &Hyp2F1Args) {
    match hyp2f1(args) {
        Ok(v) => {
            let w = v.to_complex();
            println!("{label:>28}: {:+.12e} {:+.12e}i   (log|F| = {:+.6})", w.re, w.im, v.log_mag);
        }
        Err(e) => println!("{label:>28}: error: {e}"),
    }
}

fn main() {
    let c = Complex64::new;

    show(
        "series, real",
        &Hyp2F1Args { alpha: c(1.0, 0.0), beta: c(1.0, 0.0), gamma: c(2.0, 0.0), z: c(0.5, 0.0), log1m_z: None },
    );
    show(
        "series, complex",
        &Hyp2F1Args {
            alpha: c(0.3, -0.2),
            beta: c(1.1, 0.5),
            gamma: c(2.2, -0.1),
            z: c(0.55, 0.2),
            log1m_z: None,
        },
    );
    show(
        "connection, z near 1",
        &Hyp2F1Args { alpha: c(0.3, 0.0), beta: c(0.7, 0.0), gamma: c(2.4, 0.3), z: c(0.93, 0.0), log1m_z: None },
    );

    // 1 - z = 1e-40 is unrepresentable next to z = 1, so the caller
    // passes its logarithm instead of z itself being trusted.
    show(
        "supplied log(1-z)",
        &Hyp2F1Args {
            alpha: c(0.25, 0.4),
            beta: c(0.75, -0.4),
            gamma: c(1.5, 0.0),
            z: c(1.0, 0.0),
            log1m_z: Some(c(-40.0 * std::f64::consts::LN_10, 0.0)),
        },
    );

    // gamma - alpha - beta integer: the two-term connection formula
    // degenerates and the evaluator refuses rather than guessing.
    show(
        "degenerate connection",
        &Hyp2F1Args { alpha: c(1.0, 0.0), beta: c(1.0, 0.0), gamma: c(2.0, 0.0), z: c(0.999999, 0.0), log1m_z: None },
    );
}
