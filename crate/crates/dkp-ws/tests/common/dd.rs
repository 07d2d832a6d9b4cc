//! Double-double (roughly 106-bit) complex arithmetic, just enough to
//! run the hypergeometric series as an extended-precision oracle. The
//! error-free transforms are the textbook ones; products lean on the
//! fused multiply-add.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        quick_two_sum(s.hi, s.lo + self.lo + o.lo)
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    pub fn mul_f64(self, x: f64) -> Dd {
        let p = two_prod(self.hi, x);
        quick_two_sum(p.hi, p.lo + self.lo * x)
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r2 = r.sub(o.mul_f64(q2));
        let q3 = r2.hi / o.hi;
        quick_two_sum(q1, q2).add(Dd::from_f64(q3))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: DdComplex = DdComplex {
        re: Dd { hi: 1.0, lo: 0.0 },
        im: Dd::ZERO,
    };

    pub fn from_c(w: Complex64) -> DdComplex {
        DdComplex {
            re: Dd::from_f64(w.re),
            im: Dd::from_f64(w.im),
        }
    }

    pub fn to_c(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn add(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    pub fn add_f64(self, x: f64) -> DdComplex {
        DdComplex {
            re: self.re.add(Dd::from_f64(x)),
            im: self.im,
        }
    }

    pub fn mul(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    pub fn div(self, o: DdComplex) -> DdComplex {
        let den = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(DdComplex { re: o.re, im: o.im.neg() });
        DdComplex {
            re: num.re.div(den),
            im: num.im.div(den),
        }
    }

    /// Magnitude of the leading component, good enough for stopping
    /// decisions.
    pub fn norm_approx(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }
}

/// Gauss series evaluated term by term in double-double arithmetic.
/// Converges for |z| < 1; callers stay inside |z| <= 0.7 where the
/// tail shrinks geometrically. Returns None if the requested relative
/// tail bound was not reached within `max_terms`.
pub fn hyp2f1_series_dd(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Option<Complex64> {
    let z_dd = DdComplex::from_c(z);
    let mut term = DdComplex::ONE;
    let mut sum = DdComplex::ONE;
    let mut quiet = 0;
    for n in 0..max_terms {
        let nf = n as f64;
        let num = DdComplex::from_c(alpha)
            .add_f64(nf)
            .mul(DdComplex::from_c(beta).add_f64(nf));
        let den = DdComplex::from_c(gamma)
            .add_f64(nf)
            .mul(DdComplex::from_c(Complex64::new(nf + 1.0, 0.0)));
        term = term.mul(num).div(den).mul(z_dd);
        sum = sum.add(term);
        if term.norm_approx() <= tol * sum.norm_approx().max(1e-300) {
            quiet += 1;
            if quiet >= 3 {
                return Some(sum.to_c());
            }
        } else {
            quiet = 0;
        }
    }
    None
}
