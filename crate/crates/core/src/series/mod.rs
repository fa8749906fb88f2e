//! Exact truncated series arithmetic.

mod bipoly;
mod error;
mod power_series;
mod zpoly;

pub use bipoly::DxPoly;
pub use error::SeriesError;
pub use power_series::PowerSeries;
pub use zpoly::{Coeff, DxCoeff, ZPoly};
