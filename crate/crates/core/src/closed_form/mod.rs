//! Closed-form series: the radicals of the perimeter generating function,
//! the kernel roots, directed counts, and the column-convex comparison.
//!
//! `d` is a rational sample rather than a symbol here.

mod column_convex;
mod directed;
mod kernel;
mod radicals;
mod ratios;

use thiserror::Error;

use crate::layered::LayeredError;
use crate::series::SeriesError;

pub use column_convex::{column_convex_f, Variant};
pub use directed::{directed_e, ternary_count};
pub use kernel::{
    first_non_integral, kernel_factors, kernel_product, kernel_residuals, root_field, roots,
    symmetric_identities, KernelFactors, KernelResiduals, Roots, SymmetricResiduals,
};
pub use radicals::{r1_radicand, r2_radicand, r3_radicand, radicals, Radicals};
pub use ratios::{ratio_table, round_half_even, RatioRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Layered(#[from] LayeredError),
    #[error("coefficient of x^{degree} kept an irrational part")]
    Irrational { degree: usize },
    #[error("coefficient of x^{degree} is not a nonnegative integer")]
    NonIntegral { degree: usize },
}
