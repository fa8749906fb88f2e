//! Exact enumeration of diagonally convex polyominoes by perimeter.

pub mod brute;
pub mod closed_form;
pub mod counts;
pub mod layered;
pub mod scalar;
pub mod series;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use scalar::{ExactSqrt, Field, QuadExt, Scalar};
pub use series::{Coeff, DxCoeff, DxPoly, PowerSeries, SeriesError, ZPoly};

pub type Rational = BigRational;
/// Truncated series in `x` over the rationals.
pub type XSeries = PowerSeries<Rational>;
/// Integer polynomial in `d` and `x`, truncated in `x`.
pub type BiPoly = DxPoly<BigInt>;
/// Polynomial in `z` over [`BiPoly`].
pub type ZPolySeries = ZPoly<BiPoly>;
