//! Separable geometry descriptors: concentric cylinders and concentric
//! spheres, with the normal coordinate system of the interface, curvature
//! data, surface calculus on modal fields, and the boundary-layer cutoff.
//!
//! Conventions fixed here and consumed everywhere else:
//! - The interior region is the ball/disk bounded by the interface; the
//!   exterior is the shell/annulus out to the outer boundary.
//! - The unit normal on the interface points into the interior region, and
//!   the normal depth `y3 = r_sigma - |x|` grows in that direction.
//! - With that orientation the signed curvature of the interface is
//!   `+1/r_sigma`. The orthonormal tangent frame is (theta_hat, z_hat) on
//!   the cylinder and (theta_hat, phi_hat) on the sphere.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Geometry kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeometryKind {
    ConcentricCylinders,
    ConcentricSpheres,
}

/// Concentric-interface geometry descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    pub kind: GeometryKind,
    /// Radius of the interface.
    pub r_sigma: f64,
    /// Radius of the outer boundary, > r_sigma.
    pub r_gamma: f64,
}

/// Fraction of `r_sigma` below which the normal-coordinate chart is not used.
pub const CHART_FLOOR: f64 = 0.1;

impl Geometry {
    pub fn new(kind: GeometryKind, r_sigma: f64, r_gamma: f64) -> Result<Self> {
        if !(r_sigma > 0.0 && r_gamma > r_sigma) {
            return Err(Error::ParameterDomain(format!(
                "need 0 < r_sigma < r_gamma, got ({r_sigma}, {r_gamma})"
            )));
        }
        Ok(Self { kind, r_sigma, r_gamma })
    }

    pub fn cylinders(r_sigma: f64, r_gamma: f64) -> Result<Self> {
        Self::new(GeometryKind::ConcentricCylinders, r_sigma, r_gamma)
    }

    pub fn spheres(r_sigma: f64, r_gamma: f64) -> Result<Self> {
        Self::new(GeometryKind::ConcentricSpheres, r_sigma, r_gamma)
    }

    /// Normal coordinates of an interior point given by its radius and
    /// angular coordinates: returns the depth `y3 = r_sigma - r >= 0`.
    /// The angular coordinates are unchanged by the chart.
    pub fn normal_depth(&self, r: f64) -> Result<f64> {
        if r > self.r_sigma * (1.0 + 1e-12) {
            return Err(Error::ChartDomain(format!(
                "radius {r} lies outside the interior region (r_sigma = {})",
                self.r_sigma
            )));
        }
        if r < CHART_FLOOR * self.r_sigma {
            return Err(Error::ChartDomain(format!(
                "radius {r} below chart validity floor {}",
                CHART_FLOOR * self.r_sigma
            )));
        }
        Ok((self.r_sigma - r).max(0.0))
    }

    /// Inverse of the chart: radius at a given depth.
    pub fn radius_at_depth(&self, y3: f64) -> f64 {
        self.r_sigma - y3
    }

    /// Constant curvature data of the interface.
    pub fn curvature(&self) -> CurvatureData {
        let kappa = 1.0 / self.r_sigma;
        match self.kind {
            GeometryKind::ConcentricCylinders => CurvatureData {
                // frame (theta_hat, z_hat): the axial direction is flat
                b: [[kappa, 0.0], [0.0, 0.0]],
                mean_h: kappa / 2.0,
            },
            GeometryKind::ConcentricSpheres => CurvatureData {
                b: [[kappa, 0.0], [0.0, kappa]],
                mean_h: kappa,
            },
        }
    }

    /// Modal surface divergence on the interface.
    ///
    /// Cylinder mode `m`: the field `(j_theta, j_z) e^{i m theta}` has
    /// divergence `(i m / r_sigma) j_theta` (the axial factor carries no z
    /// dependence). Sphere mode `n`: the gradient-type component `j_b` of a
    /// field `j_b B + j_x X` contributes `-sqrt(n(n+1))/r_sigma * j_b`
    /// (times the scalar harmonic), while the curl-type component is
    /// divergence-free.
    pub fn surface_divergence(&self, mode: ModeIndex, j_modal: [Complex64; 2]) -> Complex64 {
        match (self.kind, mode) {
            (GeometryKind::ConcentricCylinders, ModeIndex::Cylinder { m }) => {
                Complex64::new(0.0, m as f64 / self.r_sigma) * j_modal[0]
            }
            (GeometryKind::ConcentricSpheres, ModeIndex::Sphere { n, .. }) => {
                let nn = (n as f64) * (n as f64 + 1.0);
                -nn.sqrt() / self.r_sigma * j_modal[0]
            }
            _ => panic!("mode index does not match geometry kind"),
        }
    }
}

/// Angular mode index. For the sphere, `m` is the azimuthal index |m| <= n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModeIndex {
    Cylinder { m: i32 },
    Sphere { n: i32, m: i32 },
}

/// Curvature tensor in the orthonormal tangent frame, plus mean curvature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvatureData {
    pub b: [[f64; 2]; 2],
    pub mean_h: f64,
}

impl CurvatureData {
    /// Apply (C - H) to a tangential modal vector.
    pub fn c_minus_h(&self, j: [Complex64; 2]) -> [Complex64; 2] {
        [
            (self.b[0][0] - self.mean_h) * j[0] + self.b[0][1] * j[1],
            self.b[1][0] * j[0] + (self.b[1][1] - self.mean_h) * j[1],
        ]
    }
}

/// Quintic smoothstep cutoff in the normal depth: identically 1 on
/// `[0, d0]`, identically 0 beyond `d1`, C^2 everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cutoff {
    pub d0: f64,
    pub d1: f64,
}

impl Cutoff {
    pub fn new(d0: f64, d1: f64, r_sigma: f64) -> Result<Self> {
        if !(0.0 < d0 && d0 < d1 && d1 < r_sigma) {
            return Err(Error::ParameterDomain(format!(
                "cutoff knots must satisfy 0 < d0 < d1 < r_sigma, got ({d0}, {d1})"
            )));
        }
        Ok(Self { d0, d1 })
    }

    /// Default knots at 0.3 and 0.6 of the interface radius.
    pub fn default_for(g: &Geometry) -> Self {
        Self {
            d0: 0.3 * g.r_sigma,
            d1: 0.6 * g.r_sigma,
        }
    }

    /// Value, first and second derivative of the cutoff at depth y3 >= 0.
    pub fn eval(&self, y3: f64) -> (f64, f64, f64) {
        if y3 <= self.d0 {
            return (1.0, 0.0, 0.0);
        }
        if y3 >= self.d1 {
            return (0.0, 0.0, 0.0);
        }
        let w = self.d1 - self.d0;
        let t = (y3 - self.d0) / w;
        // descending quintic smoothstep: 1 - (6t^5 - 15t^4 + 10t^3)
        let chi = 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
        let dchi = -30.0 * t * t * (1.0 - t) * (1.0 - t) / w;
        let d2chi = -60.0 * t * (1.0 - t) * (1.0 - 2.0 * t) / (w * w);
        (chi, dchi, d2chi)
    }
}
