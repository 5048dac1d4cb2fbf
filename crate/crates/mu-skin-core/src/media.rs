//! Physical parameters of the transmission problem and every derived scalar
//! quantity: the small parameter, wavenumbers, skin-depth factors, the
//! complex boundary-layer rate, and the stability constants.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical constants of the two-material problem, in coherent SI-like units.
///
/// The interior region carries permeability `mu_r * mu_plus` and conductivity
/// `sigma_minus`; the exterior carries `mu_plus` and `sigma_plus`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MediaParams {
    /// Angular frequency (rad/s), positive.
    pub omega: f64,
    /// Electric permittivity (F/m), positive.
    pub eps0: f64,
    /// Exterior permeability (H/m), positive.
    pub mu_plus: f64,
    /// Relative permeability of the interior, >= 1.
    pub mu_r: f64,
    /// Exterior conductivity (S/m), positive.
    pub sigma_plus: f64,
    /// Interior conductivity (S/m), positive.
    pub sigma_minus: f64,
}

impl MediaParams {
    pub fn validate(&self) -> Result<()> {
        // omega = 0 is excluded by the model; omega < 0 would flip the sign
        // of the skin-depth factors, which the time convention fixes positive.
        if !(self.omega > 0.0) {
            return Err(Error::ParameterDomain(format!(
                "omega must be positive, got {}",
                self.omega
            )));
        }
        for (name, v) in [
            ("eps0", self.eps0),
            ("mu_plus", self.mu_plus),
            ("sigma_plus", self.sigma_plus),
            ("sigma_minus", self.sigma_minus),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::ParameterDomain(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if !(self.mu_r >= 1.0) || !self.mu_r.is_finite() {
            return Err(Error::ParameterDomain(format!(
                "mu_r must be >= 1 (high-permeability regime), got {}",
                self.mu_r
            )));
        }
        Ok(())
    }
}

/// Quantities derived from [`MediaParams`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedParams {
    /// Small parameter 1/sqrt(mu_r).
    pub eps: f64,
    /// Exterior wavenumber omega * sqrt(eps0 * mu_plus).
    pub kappa_plus: f64,
    /// sqrt(omega eps0 / sigma_plus).
    pub delta_plus: f64,
    /// sqrt(omega eps0 / sigma_minus).
    pub delta_minus: f64,
    /// 1 + i / delta_plus^2.
    pub alpha_plus: Complex64,
    /// 1 + i / delta_minus^2.
    pub alpha_minus: Complex64,
    /// arctan(1 / delta_minus^2), in (0, pi/2).
    pub theta_minus: f64,
    /// Complex boundary-layer decay rate, Re > 0.
    pub lambda: Complex64,
    /// Stability constant m.
    pub stab_m: f64,
    /// Stability constant C1.
    pub stab_c1: f64,
    /// Stability constant C2.
    pub stab_c2: f64,
}

impl DerivedParams {
    /// Exterior wavenumber squared kappa_plus^2 alpha_plus.
    pub fn k_plus_sq(&self) -> Complex64 {
        self.kappa_plus * self.kappa_plus * self.alpha_plus
    }

    /// Exterior wavenumber (principal branch; first quadrant).
    pub fn k_plus(&self) -> Complex64 {
        self.kappa_plus * self.alpha_plus.sqrt()
    }

    /// Interior wavenumber kappa_plus sqrt(alpha_minus) / eps = i lambda / eps.
    pub fn k_minus(&self) -> Complex64 {
        self.kappa_plus * self.alpha_minus.sqrt() / self.eps
    }
}

/// Populate every derived quantity.
pub fn derive_params(p: &MediaParams) -> Result<DerivedParams> {
    p.validate()?;
    let eps = 1.0 / p.mu_r.sqrt();
    let kappa_plus = p.omega * (p.eps0 * p.mu_plus).sqrt();
    let delta_plus = (p.omega * p.eps0 / p.sigma_plus).sqrt();
    let delta_minus = (p.omega * p.eps0 / p.sigma_minus).sqrt();
    let alpha_plus = Complex64::new(1.0, 1.0 / (delta_plus * delta_plus));
    let alpha_minus = Complex64::new(1.0, 1.0 / (delta_minus * delta_minus));
    let theta_minus = (1.0 / (delta_minus * delta_minus)).atan();
    let d4 = delta_minus.powi(4);
    let modulus = kappa_plus * (1.0 + 1.0 / d4).powf(0.25);
    let phase = (theta_minus - std::f64::consts::PI) / 2.0;
    let lambda = modulus * Complex64::new(phase.cos(), phase.sin());

    let (m, c1, c2) = stability_constants_inner(p);
    Ok(DerivedParams {
        eps,
        kappa_plus,
        delta_plus,
        delta_minus,
        alpha_plus,
        alpha_minus,
        theta_minus,
        lambda,
        stab_m: m,
        stab_c1: c1,
        stab_c2: c2,
    })
}

/// Stability constants (m, C1, C2) of the uniform a priori estimate.
pub fn stability_constants(p: &MediaParams) -> Result<(f64, f64, f64)> {
    p.validate()?;
    Ok(stability_constants_inner(p))
}

fn stability_constants_inner(p: &MediaParams) -> (f64, f64, f64) {
    let we = p.omega * p.eps0;
    let s_minus = we * we + p.sigma_minus * p.sigma_minus;
    let s_plus = we * we + p.sigma_plus * p.sigma_plus;
    let m = s_minus.sqrt().min(s_plus.sqrt());
    let c1 = (s_minus / p.sigma_minus).max(s_plus / p.sigma_plus) / m;
    let c2 = (p.eps0 * c1 * c1 / (m * m) + c1 / (p.omega * m)).sqrt();
    (m, c1, c2)
}
