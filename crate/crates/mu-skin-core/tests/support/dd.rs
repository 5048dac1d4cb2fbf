//! Minimal double-double arithmetic (~31 significant digits) used by the
//! test oracles. Only the operations the oracles need are implemented.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Parse a decimal literal digit by digit; accurate to full dd precision.
    pub fn from_decimal_str(s: &str) -> Dd {
        let mut v = Dd::ZERO;
        let mut scale = Dd::ONE;
        let mut frac = false;
        let mut neg = false;
        for c in s.chars() {
            match c {
                '-' => neg = true,
                '+' => {}
                '.' => frac = true,
                d if d.is_ascii_digit() => {
                    let digit = Dd::from_f64((d as u8 - b'0') as f64);
                    if frac {
                        scale = scale.div(Dd::from_f64(10.0));
                        v = v.add(digit.mul(scale));
                    } else {
                        v = v.mul(Dd::from_f64(10.0)).add(digit);
                    }
                }
                _ => panic!("bad decimal literal {s}"),
            }
        }
        if neg {
            v = v.neg()
        }
        v
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from_f64(q1)));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul(Dd::from_f64(q2)));
        let q3 = r.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let y = Dd::from_f64(self.hi.sqrt());
        // one Newton step: y' = (y + x/y) / 2
        y.add(self.div(y)).mul(Dd::from_f64(0.5))
    }

    pub fn pi() -> Dd {
        Dd::from_decimal_str("3.14159265358979323846264338327950288419716939937511")
    }

    pub fn two_pi() -> Dd {
        Dd::from_decimal_str("6.28318530717958647692528676655900576839433879875021")
    }

    pub fn ln2() -> Dd {
        Dd::from_decimal_str("0.69314718055994530941723212145817656807550013436026")
    }

    pub fn euler_gamma() -> Dd {
        Dd::from_decimal_str("0.57721566490153286060651209008240243104215933593992")
    }

    pub fn exp(self) -> Dd {
        let m = (self.hi / std::f64::consts::LN_2).round();
        let t = self.sub(Dd::ln2().mul(Dd::from_f64(m)));
        // scale down, Taylor, square back up
        let k = 9u32;
        let t = t.div(Dd::from_f64((1u64 << k) as f64));
        let mut sum = Dd::ONE;
        let mut term = Dd::ONE;
        for j in 1..40 {
            term = term.mul(t).div(Dd::from_f64(j as f64));
            sum = sum.add(term);
            if term.abs().hi < 1e-36 * sum.abs().hi.max(1.0) {
                break;
            }
        }
        for _ in 0..k {
            sum = sum.mul(sum);
        }
        // multiply by 2^m
        let scale = (m as i32).clamp(-1000, 1000);
        sum.mul(Dd::from_f64(2f64.powi(scale)))
    }

    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0, "ln of non-positive dd");
        let mut y = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            // y += x * exp(-y) - 1
            let corr = self.mul(y.neg().exp()).sub(Dd::ONE);
            y = y.add(corr);
        }
        y
    }

    /// sin and cos with reduction modulo 2 pi; adequate for |x| <= ~1e6.
    pub fn sin_cos(self) -> (Dd, Dd) {
        let two_pi = Dd::two_pi();
        let m = (self.hi / two_pi.hi).round();
        let t = self.sub(two_pi.mul(Dd::from_f64(m)));
        let k = 8u32;
        let t = t.div(Dd::from_f64((1u64 << k) as f64));
        // Taylor for the reduced argument
        let mut s = t;
        let mut c = Dd::ONE;
        let t2 = t.mul(t);
        let mut term_s = t;
        let mut term_c = Dd::ONE;
        for j in 1..24 {
            let j2 = (2 * j) as f64;
            term_c = term_c.mul(t2).div(Dd::from_f64(j2 * (j2 - 1.0))).neg();
            c = c.add(term_c);
            term_s = term_s.mul(t2).div(Dd::from_f64(j2 * (j2 + 1.0))).neg();
            s = s.add(term_s);
            if term_s.abs().hi < 1e-38 && term_c.abs().hi < 1e-38 {
                break;
            }
        }
        // double-angle k times
        for _ in 0..k {
            let ns = Dd::from_f64(2.0).mul(s).mul(c);
            let nc = c.mul(c).sub(s.mul(s));
            s = ns;
            c = nc;
        }
        (s, c)
    }

    /// atan2 refined from the f64 seed by Newton with dd trig.
    pub fn atan2(y: Dd, x: Dd) -> Dd {
        let mut theta = Dd::from_f64(y.hi.atan2(x.hi));
        let r = x.mul(x).add(y.mul(y)).sqrt();
        for _ in 0..2 {
            let (s, c) = theta.sin_cos();
            // f = sin(theta) x - cos(theta) y, f' = cos(theta) x + sin(theta) y
            let f = s.mul(x).sub(c.mul(y));
            let fp = c.mul(x).add(s.mul(y));
            if fp.hi.abs() < 1e-300 * r.hi.max(1.0) {
                break;
            }
            theta = theta.sub(f.div(fp));
        }
        theta
    }
}

/// Complex double-double.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: Cdd = Cdd { re: Dd::ONE, im: Dd::ZERO };

    pub fn new(re: Dd, im: Dd) -> Cdd {
        Cdd { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Cdd {
        Cdd::new(Dd::from_f64(re), Dd::from_f64(im))
    }

    pub fn to_complex(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn add(self, o: Cdd) -> Cdd {
        Cdd::new(self.re.add(o.re), self.im.add(o.im))
    }

    pub fn sub(self, o: Cdd) -> Cdd {
        Cdd::new(self.re.sub(o.re), self.im.sub(o.im))
    }

    pub fn neg(self) -> Cdd {
        Cdd::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd::new(
            self.re.mul(o.re).sub(self.im.mul(o.im)),
            self.re.mul(o.im).add(self.im.mul(o.re)),
        )
    }

    pub fn mul_dd(self, s: Dd) -> Cdd {
        Cdd::new(self.re.mul(s), self.im.mul(s))
    }

    pub fn div(self, o: Cdd) -> Cdd {
        let d = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(o.conj());
        Cdd::new(num.re.div(d), num.im.div(d))
    }

    pub fn conj(self) -> Cdd {
        Cdd::new(self.re, self.im.neg())
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.mul(self.re).add(self.im.mul(self.im))
    }

    pub fn abs(self) -> Dd {
        self.norm_sqr().sqrt()
    }

    /// Principal logarithm.
    pub fn ln(self) -> Cdd {
        let r2 = self.norm_sqr();
        let re = r2.ln().mul(Dd::from_f64(0.5));
        let im = Dd::atan2(self.im, self.re);
        Cdd::new(re, im)
    }

    pub fn exp(self) -> Cdd {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cdd::new(m.mul(c), m.mul(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dd_basics() {
        let third = Dd::ONE.div(Dd::from_f64(3.0));
        let one = third.mul(Dd::from_f64(3.0));
        assert!((one.sub(Dd::ONE)).abs().hi < 1e-30);
        let e = Dd::ONE.exp();
        assert!((e.hi - std::f64::consts::E).abs() < 1e-15);
        let l = e.ln();
        assert!(l.sub(Dd::ONE).abs().hi < 1e-30);
        let (s, c) = Dd::pi().div(Dd::from_f64(6.0)).sin_cos();
        assert!((s.hi - 0.5).abs() < 1e-15 && s.sub(Dd::from_f64(0.5)).abs().hi < 1e-29);
        assert!((c.mul(c).add(s.mul(s)).sub(Dd::ONE)).abs().hi < 1e-29);
    }
}
