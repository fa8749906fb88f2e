//! The three square roots `R₁`, `R₂`, `R₃` of the perimeter generating
//! function, with `d` marking diagonals.

use crate::scalar::{ExactSqrt, Field};
use crate::series::{PowerSeries, SeriesError};

/// Builds `Σ c_k x^k` from `(k, c_k)` pairs.
pub(crate) fn poly<T: Field>(terms: Vec<(usize, T)>, order: usize) -> PowerSeries<T> {
    PowerSeries::from_terms(terms, order)
}

/// `a + b·d + c·d²`.
pub(crate) fn quad<T: Field>(d: &T, a: i64, b: i64, c: i64) -> T {
    let mut out = T::from_int(c).mul_ref(d);
    out += &T::from_int(b);
    out *= d;
    out += &T::from_int(a);
    out
}

/// `Σ c_i t^i`, lowest degree first.
pub(crate) fn horner<T: Field>(t: &T, coeffs: &[i64]) -> T {
    let mut out = T::zero();
    for &c in coeffs.iter().rev() {
        out *= t;
        out += &T::from_int(c);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct Radicals<T> {
    pub r1: PowerSeries<T>,
    pub r2: PowerSeries<T>,
    pub r3: PowerSeries<T>,
    pub r1_radicand: PowerSeries<T>,
    pub r2_radicand: PowerSeries<T>,
    pub r3_radicand: PowerSeries<T>,
}

pub fn r1_radicand<T: Field>(d: &T, order: usize) -> PowerSeries<T> {
    poly(
        vec![
            (0, T::one()),
            (4, T::from_int(-2)),
            (6, quad(d, 0, -2, 0)),
            (8, T::one()),
            (10, quad(d, 0, -2, 0)),
            (12, quad(d, 0, 0, 1)),
        ],
        order,
    )
}

pub fn r2_radicand<T: Field>(d: &T, order: usize) -> PowerSeries<T> {
    poly(
        vec![
            (0, T::one()),
            (2, quad(d, -4, -4, 0)),
            (4, quad(d, 6, 8, 0)),
            (6, quad(d, -4, -2, 0)),
            (8, quad(d, 1, -4, 0)),
            (10, quad(d, 0, 2, 0)),
            (12, quad(d, 0, 0, 1)),
        ],
        order,
    )
}

/// The bracket under `R₃`; it contains `R₂` itself.
pub fn r3_radicand<T: Field>(d: &T, r2: &PowerSeries<T>) -> PowerSeries<T> {
    let order = r2.order();
    let rational_part = poly(
        vec![
            (0, quad(d, 2, 4, 1)),
            (2, quad(d, 0, -4, -4)),
            (4, quad(d, -4, 0, 6)),
            (8, quad(d, 2, 4, -7)),
            (10, quad(d, 0, 4, 4)),
            (12, quad(d, 0, 0, 2)),
        ],
        order,
    );
    let multiplier = poly(
        vec![
            (0, T::from_int(2)),
            (2, T::from_int(4)),
            (4, T::from_int(2)),
            (6, quad(d, 0, 2, 0)),
        ],
        order,
    );
    &rational_part + &(&multiplier * r2)
}

pub fn radicals<T: Field + ExactSqrt>(d: &T, order: usize) -> Result<Radicals<T>, SeriesError> {
    let r1_radicand = r1_radicand(d, order);
    let r2_radicand = r2_radicand(d, order);
    let r1 = r1_radicand.try_sqrt()?;
    let r2 = r2_radicand.try_sqrt()?;
    let r3_radicand = r3_radicand(d, &r2);
    let r3 = r3_radicand.try_sqrt()?;
    Ok(Radicals {
        r1,
        r2,
        r3,
        r1_radicand,
        r2_radicand,
        r3_radicand,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use crate::XSeries;

    #[test]
    fn r1_at_unit_d() {
        let r = radicals(&rat(1), 6).unwrap();
        assert_eq!(r.r1, XSeries::from_ints(&[1, 0, 0, 0, -1, 0, -1], 6));
    }

    #[test]
    fn r1_perfect_square_at_zero() {
        let r = radicals(&rat(0), 12).unwrap();
        assert_eq!(r.r1, XSeries::from_ints(&[1, 0, 0, 0, -1], 12));
    }

    #[test]
    fn r3_constant_term() {
        for d in [rat(1), rat(2), ratio(1, 2)] {
            let r = radicals(&d, 0).unwrap();
            assert_eq!(r.r3.coeff(0), &d + &rat(2));
        }
    }

    #[test]
    fn squares_reproduce_radicands() {
        let r = radicals(&ratio(3, 2), 30).unwrap();
        assert_eq!(&r.r1 * &r.r1, r.r1_radicand);
        assert_eq!(&r.r2 * &r.r2, r.r2_radicand);
        assert_eq!(&r.r3 * &r.r3, r.r3_radicand);
    }
}
