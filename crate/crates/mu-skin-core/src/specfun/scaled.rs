//! Exponentially scaled complex values.
//!
//! Fields inside the magnetic conductor behave like `exp(-Re(lambda) y3 / eps)`
//! and the radial basis functions that represent them grow like
//! `exp(|Im z|)` with `|Im z|` up to ~1e6 in the deep-contrast regime.
//! A plain `Complex64` overflows there, so every special-function value is
//! carried as `mantissa * exp(log_scale)` with the mantissa kept in a
//! narrow magnitude band.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A complex number stored as `mantissa * exp(log_scale)`.
///
/// Invariant: whenever the represented value is nonzero, the mantissa is
/// renormalized into `0.1 <= |mantissa| <= 10`. A zero value is stored as
/// mantissa `0` with `log_scale = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledValue {
    pub mantissa: Complex64,
    pub log_scale: f64,
}

impl ScaledValue {
    pub const ZERO: ScaledValue = ScaledValue {
        mantissa: Complex64::new(0.0, 0.0),
        log_scale: 0.0,
    };

    pub const ONE: ScaledValue = ScaledValue {
        mantissa: Complex64::new(1.0, 0.0),
        log_scale: 0.0,
    };

    /// Build from raw parts and renormalize.
    pub fn new(mantissa: Complex64, log_scale: f64) -> Self {
        Self { mantissa, log_scale }.normalized()
    }

    pub fn from_complex(value: Complex64) -> Self {
        Self::new(value, 0.0)
    }

    pub fn from_real(value: f64) -> Self {
        Self::from_complex(Complex64::new(value, 0.0))
    }

    /// Renormalize the mantissa into the `[0.1, 10]` magnitude band.
    pub fn normalized(self) -> Self {
        let norm = self.mantissa.norm();
        if norm == 0.0 {
            return Self::ZERO;
        }
        if !(0.1..=10.0).contains(&norm) {
            let shift = norm.ln();
            Self {
                mantissa: self.mantissa / norm,
                log_scale: self.log_scale + shift,
            }
        } else {
            self
        }
    }

    /// Collapse to a plain complex number. Overflows to infinity / underflows
    /// to zero exactly as `exp` does; callers in the deep-contrast regime
    /// must stay in scaled form instead.
    pub fn to_complex(self) -> Complex64 {
        self.mantissa * self.log_scale.exp()
    }

    pub fn is_zero(self) -> bool {
        self.mantissa.norm() == 0.0
    }

    /// Natural log of the magnitude of the represented value.
    pub fn ln_abs(self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mantissa.norm().ln() + self.log_scale
        }
    }

    pub fn mul(self, other: ScaledValue) -> ScaledValue {
        ScaledValue::new(self.mantissa * other.mantissa, self.log_scale + other.log_scale)
    }

    pub fn div(self, other: ScaledValue) -> ScaledValue {
        ScaledValue::new(self.mantissa / other.mantissa, self.log_scale - other.log_scale)
    }

    pub fn mul_complex(self, factor: Complex64) -> ScaledValue {
        ScaledValue::new(self.mantissa * factor, self.log_scale)
    }

    pub fn neg(self) -> ScaledValue {
        ScaledValue {
            mantissa: -self.mantissa,
            log_scale: self.log_scale,
        }
    }

    /// Scaled addition: the smaller operand is demoted onto the larger
    /// operand's scale, so the result never overflows even when the scales
    /// differ by thousands.
    pub fn add(self, other: ScaledValue) -> ScaledValue {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        let (hi, lo) = if self.log_scale >= other.log_scale {
            (self, other)
        } else {
            (other, self)
        };
        let shift = lo.log_scale - hi.log_scale;
        // exp(shift) underflows to 0 for shift < ~-745, which is the correct limit.
        let lo_mantissa = lo.mantissa * shift.exp();
        ScaledValue::new(hi.mantissa + lo_mantissa, hi.log_scale)
    }

    pub fn sub(self, other: ScaledValue) -> ScaledValue {
        self.add(other.neg())
    }

    /// Multiply by `exp(delta)` without touching the mantissa.
    pub fn shift(self, delta: f64) -> ScaledValue {
        if self.is_zero() {
            return self;
        }
        ScaledValue {
            mantissa: self.mantissa,
            log_scale: self.log_scale + delta,
        }
    }
}
