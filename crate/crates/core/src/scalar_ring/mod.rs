//! Exact coefficients: Gaussian rationals and rational functions in `a0, b0`.

mod gauss;
mod param;
mod poly;
pub mod text;

pub use gauss::GaussRat;
pub use param::ParamScalar;
pub use poly::{gcd, BiPoly, Exp};
