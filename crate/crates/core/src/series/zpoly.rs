//! Polynomials in `z` whose coefficients are `x`-truncated series.
//!
//! The layered equations divide by `1 − z` and `(1 − z)²` only in
//! combinations that leave a polynomial in `z`. Those combinations are
//! exposed as the finite sums [`ZPoly::tail_sum`] and
//! [`ZPoly::tail_weighted`]; no series division in `z` happens anywhere.

use std::ops::{Add, Mul, Sub};

use super::{DxPoly, PowerSeries};
use crate::scalar::Scalar;

/// Coefficient ring for [`ZPoly`]: a commutative ring of `x`-truncated series.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_at(order: usize) -> Self;
    fn order(&self) -> usize;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn sub_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn x_valuation(&self) -> Option<usize>;
    fn scale_int(&self, k: i64) -> Self;
}

/// Coefficients that can represent the monomials `c·d^k·x^p`.
///
/// [`DxPoly`] keeps `d` symbolic; a plain [`PowerSeries`] is the `d = 1`
/// specialization.
pub trait DxCoeff: Coeff {
    fn term(c: i64, d_pow: u32, x_pow: usize, order: usize) -> Self;
    fn mul_term(&self, c: i64, d_pow: u32, x_pow: usize) -> Self;
    /// True when `pred(d_pow, x_pow)` holds for every nonzero term; the
    /// `d`-power is `None` where `d` has been specialized away.
    fn check_terms(&self, pred: &dyn Fn(Option<u32>, usize) -> bool) -> bool;
}

impl<T: Scalar> Coeff for PowerSeries<T> {
    fn zero_at(order: usize) -> Self {
        PowerSeries::zero(order)
    }
    fn order(&self) -> usize {
        PowerSeries::order(self)
    }
    fn is_zero(&self) -> bool {
        PowerSeries::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = &*self + rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self = &*self - rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn x_valuation(&self) -> Option<usize> {
        self.valuation()
    }
    fn scale_int(&self, k: i64) -> Self {
        self.scale(&T::from_int(k))
    }
}

impl<T: Scalar> DxCoeff for PowerSeries<T> {
    fn term(c: i64, _d_pow: u32, x_pow: usize, order: usize) -> Self {
        PowerSeries::monomial(T::from_int(c), x_pow, order)
    }
    fn mul_term(&self, c: i64, _d_pow: u32, x_pow: usize) -> Self {
        self.shift_up(x_pow).scale(&T::from_int(c))
    }
    fn check_terms(&self, pred: &dyn Fn(Option<u32>, usize) -> bool) -> bool {
        self.coeffs()
            .iter()
            .enumerate()
            .all(|(p, c)| c.is_zero() || pred(None, p))
    }
}

impl<T: Scalar> Coeff for DxPoly<T> {
    fn zero_at(order: usize) -> Self {
        DxPoly::zero(order)
    }
    fn order(&self) -> usize {
        DxPoly::order(self)
    }
    fn is_zero(&self) -> bool {
        DxPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        assert!(rhs.order() >= self.order());
        for ((k, p), v) in rhs.terms() {
            self.add_term(k, p as usize, v);
        }
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        assert!(rhs.order() >= self.order());
        for ((k, p), v) in rhs.terms() {
            self.add_term(k, p as usize, &-v.clone());
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn x_valuation(&self) -> Option<usize> {
        DxPoly::x_valuation(self)
    }
    fn scale_int(&self, k: i64) -> Self {
        self.mul_monomial(&T::from_int(k), 0, 0)
    }
}

impl<T: Scalar> DxCoeff for DxPoly<T> {
    fn term(c: i64, d_pow: u32, x_pow: usize, order: usize) -> Self {
        DxPoly::monomial(T::from_int(c), d_pow, x_pow, order)
    }
    fn mul_term(&self, c: i64, d_pow: u32, x_pow: usize) -> Self {
        self.mul_monomial(&T::from_int(c), d_pow, x_pow)
    }
    fn check_terms(&self, pred: &dyn Fn(Option<u32>, usize) -> bool) -> bool {
        self.terms().all(|((k, p), _)| pred(Some(k), p as usize))
    }
}

/// `Σ_m s_m z^m` with every `s_m` truncated at the same `x`-order.
/// Trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct ZPoly<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coeff> ZPoly<C> {
    pub fn zero(order: usize) -> Self {
        ZPoly {
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn from_coeffs(coeffs: Vec<C>, order: usize) -> Self {
        assert!(
            coeffs.iter().all(|c| c.order() == order),
            "z-coefficients must share the x-order"
        );
        let mut out = ZPoly { order, coeffs };
        out.trim();
        out
    }

    pub fn constant(c: C) -> Self {
        let order = c.order();
        Self::from_coeffs(vec![c], order)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> C {
        self.coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| C::zero_at(self.order))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().map(|c| c.scale_int(k)).collect(),
            self.order,
        )
    }

    /// Multiplies every coefficient by `q`, keeping the `z`-degree.
    pub fn mul_coeff(&self, q: &C) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().map(|c| c.mul_ref(q)).collect(),
            self.order,
        )
    }

    /// Multiplies by `z^k`.
    pub fn shift_z(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero_at(self.order); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly {
            order: self.order,
            coeffs,
        }
    }

    /// Quotient by `1 − q·z`, i.e. `y_m = s_m + q·y_{m−1}`.
    ///
    /// `q` must have positive `x`-valuation so the expansion terminates
    /// under truncation.
    pub fn div_one_minus(&self, q: &C) -> Self {
        let v = q.x_valuation();
        assert!(
            v.is_none_or(|v| v >= 1),
            "1 − q·z is not invertible as a polynomial series"
        );
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        let mut m = 0;
        loop {
            let mut y = self.coeff(m);
            if let Some(prev) = out.last() {
                y.add_assign_ref(&prev.mul_ref(q));
            }
            if m >= self.coeffs.len() && y.is_zero() {
                break;
            }
            out.push(y);
            m += 1;
            assert!(
                m <= self.coeffs.len() + self.order + 1,
                "geometric tail failed to terminate"
            );
        }
        Self::from_coeffs(out, self.order)
    }

    /// `Φ₁[S](z) = (S(1) − S(z))/(1 − z) = Σ_m z^m Σ_{k>m} s_k`.
    pub fn tail_sum(&self) -> Self {
        let n = self.coeffs.len();
        if n <= 1 {
            return Self::zero(self.order);
        }
        let mut out = vec![C::zero_at(self.order); n - 1];
        let mut suffix = C::zero_at(self.order);
        for m in (0..n - 1).rev() {
            suffix.add_assign_ref(&self.coeffs[m + 1]);
            out[m] = suffix.clone();
        }
        Self::from_coeffs(out, self.order)
    }

    /// `Φ₂[S](z) = z(S′(1) − S(1))/(1 − z) − z²S(1)/(1 − z)² + zS(z)/(1 − z)²
    /// = Σ_{m≥1} z^m Σ_{k>m} (k − m)·s_k`.
    pub fn tail_weighted(&self) -> Self {
        let n = self.coeffs.len();
        if n <= 2 {
            return Self::zero(self.order);
        }
        // T_m = T_{m+1} + Σ_{k>m} s_k
        let mut out = vec![C::zero_at(self.order); n - 1];
        let mut suffix = C::zero_at(self.order);
        let mut weighted = C::zero_at(self.order);
        for m in (1..n - 1).rev() {
            suffix.add_assign_ref(&self.coeffs[m + 1]);
            weighted.add_assign_ref(&suffix);
            out[m] = weighted.clone();
        }
        Self::from_coeffs(out, self.order)
    }

    /// `S(1)`.
    pub fn eval_z1(&self) -> C {
        let mut acc = C::zero_at(self.order);
        for c in &self.coeffs {
            acc.add_assign_ref(c);
        }
        acc
    }

    /// `S′(1)`.
    pub fn deriv_z1(&self) -> C {
        let mut acc = C::zero_at(self.order);
        for (m, c) in self.coeffs.iter().enumerate().skip(1) {
            acc.add_assign_ref(&c.scale_int(m as i64));
        }
        acc
    }

    /// `S(z₀)` by Horner's rule.
    pub fn eval_at(&self, z: &C) -> C {
        let order = self.order.min(z.order());
        let mut acc = C::zero_at(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(z);
            acc.add_assign_ref(c);
        }
        acc
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        assert_eq!(
            self.order, rhs.order,
            "z-polynomials with different x-orders"
        );
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, C::zero_at(self.order));
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs) {
            if negate {
                c.sub_assign_ref(r);
            } else {
                c.add_assign_ref(r);
            }
        }
        Self::from_coeffs(coeffs, self.order)
    }
}

impl<C: DxCoeff> ZPoly<C> {
    /// `c·d^k·x^p·z^m`.
    pub fn monomial(c: i64, d_pow: u32, x_pow: usize, z_pow: usize, order: usize) -> Self {
        Self::constant(C::term(c, d_pow, x_pow, order)).shift_z(z_pow)
    }

    /// Multiplies by `c·d^k·x^p·z^m`.
    pub fn mul_term(&self, c: i64, d_pow: u32, x_pow: usize, z_pow: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| s.mul_term(c, d_pow, x_pow))
            .collect();
        Self::from_coeffs(coeffs, self.order).shift_z(z_pow)
    }
}

impl<'a, C: Coeff> Add<&'a ZPoly<C>> for &'a ZPoly<C> {
    type Output = ZPoly<C>;
    fn add(self, rhs: &'a ZPoly<C>) -> ZPoly<C> {
        self.combine(rhs, false)
    }
}

impl<'a, C: Coeff> Sub<&'a ZPoly<C>> for &'a ZPoly<C> {
    type Output = ZPoly<C>;
    fn sub(self, rhs: &'a ZPoly<C>) -> ZPoly<C> {
        self.combine(rhs, true)
    }
}

impl<'a, C: Coeff> Mul<&'a ZPoly<C>> for &'a ZPoly<C> {
    type Output = ZPoly<C>;
    fn mul(self, rhs: &'a ZPoly<C>) -> ZPoly<C> {
        let order = self.order.min(rhs.order);
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero(order);
        }
        let mut coeffs = vec![C::zero_at(order); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        ZPoly::from_coeffs(coeffs, order)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Coeff> $tr for ZPoly<C> {
            type Output = ZPoly<C>;
            fn $method(self, rhs: ZPoly<C>) -> ZPoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
