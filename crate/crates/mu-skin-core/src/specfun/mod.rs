//! Complex-argument Bessel functions with derivatives, in exponentially
//! scaled form, robust for the large interior wavenumbers of the
//! high-contrast regime.

mod cylindrical;
mod scaled;
mod spherical;

pub use cylindrical::{cyl_bessel, cyl_family_with_derivatives, CylKind, ORDER_CAP};
pub use scaled::ScaledValue;
pub use spherical::{riccati, sph_bessel, sph_family_with_derivatives, SphKind};
