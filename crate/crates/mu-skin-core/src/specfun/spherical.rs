//! Spherical Bessel functions j, y, h1 of integer order for complex
//! arguments, in scaled form, plus the Riccati variants z f(z).
//!
//! y and h1 start from their closed forms at orders 0 and 1 (kept in scaled
//! form, so `exp(|Im z|)` factors never materialize) and recur upward, which
//! is stable because they are the dominant family. j uses backward (Miller)
//! recurrence normalized against j_0 or j_1, whichever is larger.

use num_complex::Complex64;

use super::scaled::ScaledValue;
use crate::error::{Error, Result};

/// Spherical function kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphKind {
    J,
    Y,
    H1,
}

pub const ORDER_CAP: i32 = 64;

fn check_order(order: i32) -> Result<usize> {
    if !(0..=ORDER_CAP).contains(&order) {
        return Err(Error::OrderOutOfRange { order, cap: ORDER_CAP });
    }
    Ok(order as usize)
}

/// Value and derivative of a spherical Bessel function.
pub fn sph_bessel(kind: SphKind, order: i32, z: Complex64) -> Result<(ScaledValue, ScaledValue)> {
    let n = check_order(order)?;
    let fam = sph_family(kind, n + 1, z)?;
    Ok(pick_with_derivative(&fam, n, z))
}

/// Whole family `0..=max_order` with derivatives.
pub fn sph_family_with_derivatives(
    kind: SphKind,
    max_order: i32,
    z: Complex64,
) -> Result<Vec<(ScaledValue, ScaledValue)>> {
    let n = check_order(max_order)?;
    let fam = sph_family(kind, n + 1, z)?;
    Ok((0..=n).map(|k| pick_with_derivative(&fam, k, z)).collect())
}

/// Riccati form: S_n(z) = z f_n(z) and S_n'(z) = f_n(z) + z f_n'(z).
pub fn riccati(kind: SphKind, order: i32, z: Complex64) -> Result<(ScaledValue, ScaledValue)> {
    let (f, fp) = sph_bessel(kind, order, z)?;
    let zc = ScaledValue::from_complex(z);
    Ok((zc.mul(f), f.add(zc.mul(fp))))
}

/// f'_n = f_{n-1} - ((n+1)/z) f_n, and f'_0 = -f_1.
fn pick_with_derivative(fam: &[ScaledValue], n: usize, z: Complex64) -> (ScaledValue, ScaledValue) {
    let value = fam[n];
    let derivative = if n == 0 {
        fam[1].neg()
    } else {
        let factor = Complex64::new((n + 1) as f64, 0.0) / z;
        fam[n - 1].sub(fam[n].mul_complex(factor))
    };
    (value, derivative)
}

/// Family `f_0 .. f_{max}` (inclusive), so length max+1; callers ask for one
/// order above what they need for derivatives.
fn sph_family(kind: SphKind, max: usize, z: Complex64) -> Result<Vec<ScaledValue>> {
    if z.norm() == 0.0 {
        return match kind {
            SphKind::J => {
                let mut fam = vec![ScaledValue::ZERO; max + 1];
                fam[0] = ScaledValue::ONE;
                Ok(fam)
            }
            _ => Err(Error::SingularArgument(
                "y and h1 are singular at z = 0".into(),
            )),
        };
    }
    Ok(match kind {
        SphKind::J => j_family(max, z),
        SphKind::Y => {
            let (sin_z, cos_z) = scaled_sin_cos(z);
            let inv_z = Complex64::new(1.0, 0.0) / z;
            // y_0 = -cos z / z, y_1 = -cos z / z^2 - sin z / z
            let y0 = cos_z.neg().mul_complex(inv_z);
            let y1 = cos_z
                .neg()
                .mul_complex(inv_z * inv_z)
                .sub(sin_z.mul_complex(inv_z));
            recur_up(y0, y1, z, max)
        }
        SphKind::H1 => {
            // h1_0 = -i e^{iz}/z, h1_1 = -e^{iz}(1/z + i/z^2)
            let inv_z = Complex64::new(1.0, 0.0) / z;
            let e = scaled_exp_iz(z);
            let h0 = e.mul_complex(Complex64::new(0.0, -1.0) * inv_z);
            let h1 = e
                .mul_complex(-(inv_z + Complex64::new(0.0, 1.0) * inv_z * inv_z));
            recur_up(h0, h1, z, max)
        }
    })
}

/// f_{n+1} = ((2n+1)/z) f_n - f_{n-1}.
fn recur_up(f0: ScaledValue, f1: ScaledValue, z: Complex64, max: usize) -> Vec<ScaledValue> {
    let mut fam = Vec::with_capacity(max + 1);
    fam.push(f0);
    if max >= 1 {
        fam.push(f1);
    }
    for n in 1..max {
        let factor = Complex64::new((2 * n + 1) as f64, 0.0) / z;
        let next = fam[n].mul_complex(factor).sub(fam[n - 1]);
        fam.push(next);
    }
    fam
}

fn j_family(max: usize, z: Complex64) -> Vec<ScaledValue> {
    let abs_z = z.norm();
    let (sin_z, cos_z) = scaled_sin_cos(z);
    let inv_z = Complex64::new(1.0, 0.0) / z;
    let j0 = sin_z.mul_complex(inv_z);
    if max == 0 {
        return vec![j0];
    }
    let j1 = sin_z
        .mul_complex(inv_z * inv_z)
        .sub(cos_z.mul_complex(inv_z));
    if max == 1 {
        return vec![j0, j1];
    }
    // Backward recurrence, normalized against j0 or j1.
    let start = (max).max(abs_z.ceil() as usize) + 32;
    let mut above = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1e-280, 0.0);
    let mut stored = vec![Complex64::new(0.0, 0.0); max + 1];
    let mut k = start;
    loop {
        if k <= max {
            stored[k] = cur;
        }
        if k == 0 {
            break;
        }
        let below = cur * ((2 * k + 1) as f64) * inv_z - above;
        above = cur;
        cur = below;
        k -= 1;
        if cur.norm() > 1e250 {
            let f = 1e-250;
            cur *= f;
            above *= f;
            for s in stored.iter_mut() {
                *s *= f;
            }
        }
    }
    // Normalize with whichever reference has the larger mantissa path.
    let (reference, idx) = if stored[0].norm() >= stored[1].norm() {
        (j0, 0)
    } else {
        (j1, 1)
    };
    let ratio = reference.div(ScaledValue::from_complex(stored[idx]));
    stored
        .into_iter()
        .map(|m| ScaledValue::from_complex(m).mul(ratio))
        .collect()
}

/// sin z and cos z in scaled form: log_scale = |Im z|, mantissa O(1).
fn scaled_sin_cos(z: Complex64) -> (ScaledValue, ScaledValue) {
    let s = z.im.abs();
    // e^{iz} e^{-s} and e^{-iz} e^{-s}: one of the two is O(1), the other <= 1.
    let ep = Complex64::new(-z.im - s, z.re).exp(); // e^{iz - s}
    let em = Complex64::new(z.im - s, -z.re).exp(); // e^{-iz - s}
    let sin_m = (ep - em) / Complex64::new(0.0, 2.0);
    let cos_m = (ep + em) / 2.0;
    (ScaledValue::new(sin_m, s), ScaledValue::new(cos_m, s))
}

/// e^{iz} in scaled form: log_scale = -Im z.
fn scaled_exp_iz(z: Complex64) -> ScaledValue {
    ScaledValue::new(Complex64::new(0.0, z.re).exp(), -z.im)
}
