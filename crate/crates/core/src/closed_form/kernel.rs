//! The factors of the kernel, the three roots with nonnegative x-exponents,
//! and the symmetric functions of `z₄`, `z₆`.
//!
//! Everything here uses the convention in which `d²` counts diagonals.

use num_traits::Zero;

use super::radicals::{horner, poly, radicals};
use super::ClosedFormError;
use crate::scalar::{Field, QuadExt, Scalar};
use crate::series::{PowerSeries, ZPoly};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct KernelFactors<T> {
    pub fa1: PowerSeries<T>,
    pub fa2: ZPoly<PowerSeries<T>>,
    pub fa3: ZPoly<PowerSeries<T>>,
}

/// Literal transcription of the three factors.
pub fn kernel_factors<T: Field>(d: &T, order: usize) -> KernelFactors<T> {
    let e = d.mul_ref(d);
    let p = |coeffs: &[i64]| horner(&e, coeffs);
    let fa1 = poly(
        vec![
            (22, p(&[0, 1])),
            (20, p(&[1])),
            (18, p(&[0, -4])),
            (16, p(&[-5, -2])),
            (14, p(&[0, 6, 2, 1])),
            (12, p(&[10, 6, 1])),
            (10, p(&[0, -4, -4])),
            (8, p(&[-10, -6, -1])),
            (6, p(&[0, 1, 2])),
            (4, p(&[5, 2])),
            (0, p(&[-1])),
        ],
        order,
    );
    let fa2 = ZPoly::from_coeffs(
        vec![
            poly(vec![(0, p(&[1]))], order),
            poly(vec![(6, p(&[0, 1])), (4, p(&[-1])), (0, p(&[-1]))], order),
            poly(vec![(4, p(&[1]))], order),
        ],
        order,
    );
    let fa3 = ZPoly::from_coeffs(
        vec![
            poly(vec![(0, p(&[1]))], order),
            poly(
                vec![
                    (6, p(&[0, -2])),
                    (4, p(&[-2, -1])),
                    (2, p(&[0, 2])),
                    (0, p(&[-2, -1])),
                ],
                order,
            ),
            poly(
                vec![
                    (12, p(&[0, 0, 1])),
                    (10, p(&[0, 2])),
                    (8, p(&[1])),
                    (4, p(&[4, 4])),
                    (2, p(&[0, -2])),
                    (0, p(&[1])),
                ],
                order,
            ),
            poly(
                vec![
                    (10, p(&[0, -2])),
                    (8, p(&[-2, -1])),
                    (6, p(&[0, 2])),
                    (4, p(&[-2, -1])),
                ],
                order,
            ),
            poly(vec![(8, p(&[1]))], order),
        ],
        order,
    );
    KernelFactors { fa1, fa2, fa3 }
}

/// The roots live in `Q(√(4+d²))`: the radical inside `H_pl`, `H_mi` has
/// constant term `4+d²`.
pub fn root_field(d: &Rational) -> Rational {
    d * d + Rational::from_integer(4.into())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Roots {
    pub z2: PowerSeries<QuadExt>,
    pub z4: PowerSeries<QuadExt>,
    pub z6: PowerSeries<QuadExt>,
    pub h_pl: PowerSeries<QuadExt>,
    pub h_mi: PowerSeries<QuadExt>,
}

pub fn roots(d: &Rational, order: usize) -> Result<Roots, ClosedFormError> {
    let s = root_field(d);
    let dq = QuadExt::rational_in(d.clone(), &s);
    let e = dq.mul_ref(&dq);
    let p = |coeffs: &[i64]| horner(&e, coeffs);
    let wide = order + 4;

    let r1 = poly(
        vec![
            (0, p(&[1])),
            (4, p(&[-2])),
            (6, p(&[0, -2])),
            (8, p(&[1])),
            (10, p(&[0, -2])),
            (12, p(&[0, 0, 1])),
        ],
        wide,
    )
    .try_sqrt()?;
    let z2_num = &poly(vec![(0, p(&[1])), (4, p(&[1])), (6, p(&[0, -1]))], wide) - &r1;
    let z2 = z2_num
        .monomial_div(4)?
        .scale(&QuadExt::from(Rational::new(1.into(), 2.into())));

    let inner = &poly(vec![(0, p(&[1])), (2, p(&[1]))], wide)
        * &poly(
            vec![(0, p(&[4, 1])), (2, p(&[4, -3])), (4, p(&[0, 4]))],
            wide,
        );
    let inner = inner.try_sqrt()?;
    let base = poly(
        vec![
            (0, p(&[2, 1])),
            (2, p(&[0, -2])),
            (4, p(&[2, 1])),
            (6, p(&[0, 2])),
        ],
        wide,
    );
    let twist = &poly(vec![(0, dq.clone()), (2, -dq.clone())], wide) * &inner;
    let h_pl = &base + &twist;
    let h_mi = &base - &twist;

    let quarter = QuadExt::from(Rational::new(1.into(), 4.into()));
    let quartic_root = |h: &PowerSeries<QuadExt>| -> Result<PowerSeries<QuadExt>, ClosedFormError> {
        let disc = &(h * h) - &poly(vec![(4, QuadExt::from_int(16))], wide);
        let num = h - &disc.try_sqrt()?;
        Ok(num.monomial_div(4)?.scale(&quarter))
    };
    let z4 = quartic_root(&h_pl)?;
    let z6 = quartic_root(&h_mi)?;
    Ok(Roots {
        z2,
        z4,
        z6,
        h_pl: h_pl.truncate(order),
        h_mi: h_mi.truncate(order),
    })
}

impl Roots {
    pub fn field(&self) -> Option<Rational> {
        self.h_pl
            .coeffs()
            .iter()
            .find_map(|c| c.radicand().cloned())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelResiduals {
    pub fa2_z2: PowerSeries<QuadExt>,
    pub fa3_z4: PowerSeries<QuadExt>,
    pub fa3_z6: PowerSeries<QuadExt>,
}

pub fn kernel_residuals(d: &Rational, order: usize) -> Result<KernelResiduals, ClosedFormError> {
    let r = roots(d, order)?;
    let k = kernel_factors(&lift(d, &root_field(d)), order);
    Ok(KernelResiduals {
        fa2_z2: k.fa2.eval_at(&r.z2),
        fa3_z4: k.fa3.eval_at(&r.z4),
        fa3_z6: k.fa3.eval_at(&r.z6),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricResiduals {
    /// `z₄ + z₆` minus its closed form.
    pub sum: PowerSeries<QuadExt>,
    /// `1/z₄ + 1/z₆` minus its closed form.
    pub reciprocal_sum: PowerSeries<QuadExt>,
    /// Remainder of `fa₃` modulo `(z − z₄)(z − z₆)`, as `[r₀, r₁]`.
    pub quadratic_remainder: [PowerSeries<QuadExt>; 2],
}

pub fn symmetric_identities(
    d: &Rational,
    order: usize,
) -> Result<SymmetricResiduals, ClosedFormError> {
    let s = root_field(d);
    let r = roots(d, order)?;
    let e = d * d;
    let p = |coeffs: &[i64]| lift(&horner(&e, coeffs), &s);

    let wide = order + 4;
    let r3 = radicals(&e, wide)?.r3.map(|c| lift(c, &s));
    let k = poly(
        vec![
            (0, p(&[2, 1])),
            (2, p(&[0, -2])),
            (4, p(&[2, 1])),
            (6, p(&[0, 2])),
        ],
        wide,
    );
    let half = lift(&Rational::new(1.into(), 2.into()), &s);
    let sum_form = (&k - &r3).monomial_div(4)?.scale(&half);
    let sum = &(&r.z4 + &r.z6) - &sum_form;

    let recip_form = &(&k.truncate(order) + &r3.truncate(order)).scale(&half);
    let recip = &r.z4.try_inverse()? + &r.z6.try_inverse()?;
    let reciprocal_sum = &recip - recip_form;

    let sigma = &r.z4 + &r.z6;
    let pi = &r.z4 * &r.z6;
    let fa3 = kernel_factors(&lift(d, &s), order).fa3;
    let mut c: Vec<PowerSeries<QuadExt>> = fa3.coeffs().to_vec();
    for m in (2..c.len()).rev() {
        let q = c[m].clone();
        c[m - 1] = &c[m - 1] + &(&q * &sigma);
        c[m - 2] = &c[m - 2] - &(&q * &pi);
        c[m] = PowerSeries::zero(order);
    }
    c.resize(2, PowerSeries::zero(order));
    Ok(SymmetricResiduals {
        sum,
        reciprocal_sum,
        quadratic_remainder: [c[0].clone(), c[1].clone()],
    })
}

/// `fa₁·fa₂·fa₃` at a rational `d`, to be checked for integrality.
pub fn kernel_product(d: &Rational, order: usize) -> ZPoly<PowerSeries<Rational>> {
    let k = kernel_factors(d, order);
    let fa1 = ZPoly::constant(k.fa1);
    &(&fa1 * &k.fa2) * &k.fa3
}

/// First `(z-degree, x-degree)` whose coefficient is not an integer.
pub fn first_non_integral(p: &ZPoly<PowerSeries<Rational>>) -> Option<(usize, usize)> {
    p.coeffs().iter().enumerate().find_map(|(m, s)| {
        s.coeffs()
            .iter()
            .position(|c| !c.is_integer())
            .map(|k| (m, k))
    })
}

pub(crate) fn lift(q: &Rational, s: &Rational) -> QuadExt {
    if q.is_zero() {
        QuadExt::rational_in(Rational::zero(), s)
    } else {
        QuadExt::rational_in(q.clone(), s)
    }
}
