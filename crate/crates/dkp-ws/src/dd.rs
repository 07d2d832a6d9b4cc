//! Double-double arithmetic for the hypergeometric series loop.
//!
//! Large parameters near the edge of the series disc make the terms
//! grow by several orders of magnitude before the tail decays, and the
//! sum can land far below the largest term. Carrying the recurrence
//! and the accumulator in paired-f64 (roughly 106-bit) form keeps the
//! returned value at full f64 accuracy across the whole disc.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let v = s - a;
    Dd {
        hi: s,
        lo: (a - (s - v)) + (b - v),
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
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let u = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(u.hi, u.lo + t.lo)
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
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ONE: DdComplex = DdComplex {
        re: Dd { hi: 1.0, lo: 0.0 },
        im: Dd { hi: 0.0, lo: 0.0 },
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

    /// Adds a real number to the real part exactly.
    pub fn add_re(self, x: f64) -> DdComplex {
        DdComplex {
            re: self.re.add(Dd::from_f64(x)),
            im: self.im,
        }
    }

    pub fn add(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
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
        let re = self.re.mul(o.re).add(self.im.mul(o.im));
        let im = self.im.mul(o.re).sub(self.re.mul(o.im));
        DdComplex {
            re: re.div_dd(den),
            im: im.div_dd(den),
        }
    }

    /// Magnitude estimate from the leading components, plenty for
    /// stopping tests.
    pub fn norm_approx(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }
}

impl Dd {
    fn div_dd(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r1 = self.sub(o.mul_f64(q1));
        let q2 = r1.hi / o.hi;
        let r2 = r1.sub(o.mul_f64(q2));
        let q3 = r2.hi / o.hi;
        let q = two_sum(q1, q2);
        quick_two_sum(q.hi, q.lo + q3)
    }
}
