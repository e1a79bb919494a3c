//! Special-function substrate: real-order Bessel functions and their zeros,
//! Jacobi polynomials, log-gamma and the Lommel equation.

mod bessel;
mod gamma;
mod jacobi;
mod lommel;
mod zeros;

pub use bessel::{bessel_j, bessel_j_derivative, scaled_bessel, BesselOrder};
pub use gamma::log_gamma;
pub use jacobi::{effective_jacobi_degree, jacobi_p};
pub use lommel::{lommel_residual, LommelParams};
pub use zeros::{bessel_zero, bessel_zeros, BesselZero};

pub(crate) use jacobi::jacobi_unchecked;
