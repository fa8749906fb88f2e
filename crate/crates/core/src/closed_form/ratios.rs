//! Ratio of column-convex to diagonally convex counts by perimeter.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::column_convex::{column_convex_f, Variant};
use super::ClosedFormError;
use crate::layered::perimeter_counts;
use crate::scalar::rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioRow {
    pub n: u32,
    pub cc: BigUint,
    pub dc: BigUint,
    /// `cc/dc` rounded half-even to four places.
    pub ratio: String,
}

pub fn ratio_table(max_n: u32) -> Result<Vec<RatioRow>, ClosedFormError> {
    let order = max_n as usize;
    let dc = perimeter_counts(order)?;
    let cc = column_convex_f(Variant::SplitSq, &rat(1), order)?;
    (4..=max_n)
        .step_by(2)
        .map(|n| {
            let c = cc.coeff(n as usize);
            if !c.is_integer() || c.is_negative() {
                return Err(ClosedFormError::NonIntegral { degree: n as usize });
            }
            let cc_n = c.to_integer().to_biguint().expect("checked nonnegative");
            let dc_n = dc.get(&n).cloned().unwrap_or_default();
            let ratio = round_half_even(&cc_n, &dc_n, 4);
            Ok(RatioRow {
                n,
                cc: cc_n,
                dc: dc_n,
                ratio,
            })
        })
        .collect()
}

/// Decimal rendering of `num/den` with `places` digits, ties to even.
pub fn round_half_even(num: &BigUint, den: &BigUint, places: u32) -> String {
    assert!(!den.is_zero(), "ratio with zero denominator");
    let scale = BigUint::from(10u32).pow(places);
    let (mut q, r) = (num * &scale).div_rem(den);
    let twice = BigInt::from(r) * 2;
    let den_i = BigInt::from(den.clone());
    if twice > den_i || (twice == den_i && q.is_odd()) {
        q += 1u32;
    }
    let (int, frac) = q.div_rem(&scale);
    if places == 0 {
        return int.to_string();
    }
    let frac = frac.to_u64().expect("fraction below 10^places");
    format!("{int}.{frac:0width$}", width = places as usize)
}
