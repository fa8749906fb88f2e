//! Three closed forms for the perimeter generating function `F(x, y)` of
//! column-convex polyominoes, evaluated along `y = r·x`.

use std::fmt;
use std::str::FromStr;

use super::ClosedFormError;
use crate::scalar::{rat, Field, QuadExt, Scalar};
use crate::series::PowerSeries;
use crate::{Rational, XSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The standard form with radicals `r₂`, `r₃`.
    Lin,
    /// The nested-radical form over `Q(√2)`.
    Sq2,
    /// The form with two separate square roots.
    SplitSq,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Lin, Variant::Sq2, Variant::SplitSq];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Lin => "lin",
            Variant::Sq2 => "sq2",
            Variant::SplitSq => "splitsq",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| format!("unknown variant `{s}`"))
    }
}

/// `F(x, r·x)` truncated at `x^order`.
pub fn column_convex_f(
    variant: Variant,
    y_scale: &Rational,
    order: usize,
) -> Result<XSeries, ClosedFormError> {
    match variant {
        Variant::Lin => lin(y_scale, order),
        Variant::Sq2 => sq2(y_scale, order),
        Variant::SplitSq => split_sq(y_scale, order),
    }
}

fn xy<T: Field>(one: &T, y_scale: &T, order: usize) -> (PowerSeries<T>, PowerSeries<T>) {
    (
        PowerSeries::monomial(one.clone(), 1, order),
        PowerSeries::monomial(y_scale.clone(), 1, order),
    )
}

/// `a + b·t + c·t²`.
fn quadratic<T: Field>(
    t: &PowerSeries<T>,
    a: &PowerSeries<T>,
    b: &PowerSeries<T>,
    c: &PowerSeries<T>,
) -> PowerSeries<T> {
    &(a + &(b * t)) + &(&(c * t) * t)
}

fn constant<T: Field>(one: &T, k: i64, order: usize) -> PowerSeries<T> {
    PowerSeries::constant(one.mul_ref(&T::from_int(k)), order)
}

fn lin(y_scale: &Rational, order: usize) -> Result<XSeries, ClosedFormError> {
    let one = rat(1);
    let (x, y) = xy(&one, y_scale, order);
    let x2 = &x * &x;
    let y2 = &y * &y;
    let k = |n: i64| constant(&one, n, order);
    let lin_x = |a: i64, b: i64| &k(a) + &x2.scale(&rat(b));

    let ell = quadratic(&y2, &lin_x(42, -10), &lin_x(-84, 28), &lin_x(42, -10));
    let delta = quadratic(&y2, &lin_x(18, -2), &lin_x(-36, 5), &lin_x(18, -2));
    let sq = &(&k(1) - &x2.scale(&rat(2))) + &(&x2 * &x2);
    let mid = &(&k(-2) - &x2.scale(&rat(12))) - &(&x2 * &x2).scale(&rat(2));
    let r2 = quadratic(&y2, &sq, &mid, &sq).try_sqrt()?;
    let one_minus_y2 = &k(1) - &y2;
    let r3 = (&(&(&(&k(1) + &x2) * &one_minus_y2) * &one_minus_y2).scale(&rat(2))
        + &(&one_minus_y2 * &r2).scale(&rat(2)))
        .try_sqrt()?;

    let mut num = ell;
    num = &num - &(&one_minus_y2 * &r2).scale(&rat(6));
    num = &num - &(&(&(&k(17) - &x2) * &one_minus_y2) * &r3);
    num = &num - &(&r2 * &r3);
    let f = &one_minus_y2 * &num.try_div(&delta.scale(&rat(8)))?;
    Ok(f)
}

fn sq2(y_scale: &Rational, order: usize) -> Result<XSeries, ClosedFormError> {
    let two = rat(2);
    let one = QuadExt::rational_in(rat(1), &two);
    let root2 = QuadExt::root_of(&two);
    let yq = one.mul_ref(&QuadExt::from(y_scale.clone()));
    let (x, y) = xy(&one, &yq, order);
    let x2 = &x * &x;
    let y2 = &y * &y;
    let k = |n: i64| constant(&one, n, order);

    let one_minus_y2 = &k(1) - &y2;
    let one_minus_x2 = &k(1) - &x2;
    let frac = (&x2 * &y2)
        .scale(&QuadExt::from_int(16))
        .try_div(&(&one_minus_y2 * &one_minus_y2))?;
    let inner = (&(&one_minus_x2 * &one_minus_x2) - &frac).try_sqrt()?;
    let outer = (&(&k(1) + &x2) + &inner).try_sqrt()?;
    let den = &PowerSeries::constant(root2.mul_ref(&QuadExt::from_int(3)), order) - &outer;
    let ratio = PowerSeries::constant(root2.mul_ref(&QuadExt::from_int(2)), order).try_div(&den)?;
    let f = &one_minus_y2 * &(&k(1) - &ratio);
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            c.to_rational()
                .ok_or(ClosedFormError::Irrational { degree: n })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(|c| XSeries::from_coeffs(c, order))
}

fn split_sq(y_scale: &Rational, order: usize) -> Result<XSeries, ClosedFormError> {
    let one = rat(1);
    let (x, y) = xy(&one, y_scale, order);
    let y2 = &y * &y;
    let k = |n: i64| constant(&one, n, order);

    let one_minus_y2 = &k(1) - &y2;
    let frac = (&x * &y2).scale(&rat(4)).try_div(&one_minus_y2)?;
    let minus = &k(1) - &x;
    let plus = &k(1) + &x;
    let s1 = (&(&minus * &minus) - &frac).try_sqrt()?;
    let s2 = (&(&plus * &plus) + &frac).try_sqrt()?;
    let den = &(&k(6) - &s1) - &s2;
    let ratio = k(4).try_div(&den)?;
    Ok(&one_minus_y2 * &(&k(1) - &ratio))
}
