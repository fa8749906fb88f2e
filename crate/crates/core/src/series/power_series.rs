//! Truncated univariate power series in `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::SeriesError;
use crate::scalar::{ExactSqrt, Field, Scalar};

/// `c₀ + c₁x + … + c_N x^N + O(x^{N+1})`.
///
/// Every series stores exactly `N + 1` coefficients. Binary operations
/// work at the smaller of the two orders.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// `c·x^k`, or zero when `k` exceeds the order.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// coefficients beyond `order` are dropped.
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        PowerSeries { coeffs }
    }

    /// Polynomial with small integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_int(c)).collect(), order)
    }

    /// Polynomial given as sparse `(degree, coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (usize, T)>>(terms: I, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in terms {
            if k <= order {
                s.coeffs[k] += &c;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<U: Scalar, F: FnMut(&T) -> U>(&self, f: F) -> PowerSeries<U> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|c| c.mul_ref(k))
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Divides by `x^k`; the order drops by `k`.
    pub fn monomial_div(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(
            k <= self.order(),
            "cannot divide a series of order {} by x^{k}",
            self.order()
        );
        if let Some(degree) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::Valuation { degree, shift: k });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Substitutes `x ↦ c·x^k`, keeping the order.
    pub fn substitute_monomial(&self, c: &T, k: usize) -> Self {
        assert!(k >= 1);
        let n = self.order();
        let mut out = Self::zero(n);
        let mut power = T::one();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i * k > n {
                break;
            }
            out.coeffs[i * k] = a.mul_ref(&power);
            power *= c;
        }
        out
    }

    /// Evaluates the truncated polynomial at a scalar point.
    pub fn eval(&self, at: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc *= at;
            acc += c;
        }
        acc
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&mut T, &T)) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = self.coeffs[..=n].to_vec();
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs) {
            f(c, r);
        }
        PowerSeries { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Field> PowerSeries<T> {
    /// Quotient `num / den`.
    ///
    /// A denominator with zero constant term is accepted when the numerator
    /// vanishes to at least the same order; the result order then drops by
    /// the denominator's valuation.
    pub fn try_div(&self, den: &Self) -> Result<Self, SeriesError> {
        let n = self.order().min(den.order());
        let v = den
            .truncate(n)
            .valuation()
            .ok_or(SeriesError::ZeroValuation { order: n })?;
        let num = self.truncate(n).monomial_div(v).map_err(|e| match e {
            SeriesError::Valuation { degree, .. } => SeriesError::NonDivisible {
                degree,
                valuation: v,
            },
            other => other,
        })?;
        let den = den
            .truncate(n)
            .monomial_div(v)
            .expect("shift below valuation");
        let m = n - v;
        let inv0 = T::one().div_ref(&den.coeffs[0]);
        let mut q: Vec<T> = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut acc = num.coeffs[k].clone();
            for j in 1..=k {
                if !den.coeffs[j].is_zero() {
                    acc -= &den.coeffs[j].mul_ref(&q[k - j]);
                }
            }
            acc *= &inv0;
            q.push(acc);
        }
        Ok(PowerSeries { coeffs: q })
    }

    pub fn try_inverse(&self) -> Result<Self, SeriesError> {
        Self::one(self.order()).try_div(self)
    }
}

impl<T: Field + ExactSqrt> PowerSeries<T> {
    /// Square root with the positive-branch constant term, by the
    /// coefficient recurrence `2r₀r_k = s_k − Σ_{0<i<k} r_i r_{k−i}`.
    pub fn try_sqrt(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        if self.is_zero() {
            return Ok(self.clone());
        }
        let r0 = self.coeffs[0]
            .exact_sqrt()
            .ok_or(SeriesError::NonSquareConstant)?;
        if r0.is_zero() {
            return Err(SeriesError::NonSquareConstant);
        }
        let inv = T::one().div_ref(&(r0.clone() + r0.clone()));
        let mut r: Vec<T> = Vec::with_capacity(n + 1);
        r.push(r0);
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc -= &r[i].mul_ref(&r[k - i]);
            }
            acc *= &inv;
            r.push(acc);
        }
        Ok(PowerSeries { coeffs: r })
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl<'a, T: Scalar> Add<&'a PowerSeries<T>> for &'a PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn add(self, rhs: &'a PowerSeries<T>) -> PowerSeries<T> {
        self.zip_with(rhs, |a, b| *a += b)
    }
}

impl<'a, T: Scalar> Sub<&'a PowerSeries<T>> for &'a PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn sub(self, rhs: &'a PowerSeries<T>) -> PowerSeries<T> {
        self.zip_with(rhs, |a, b| *a -= b)
    }
}

impl<'a, T: Scalar> Mul<&'a PowerSeries<T>> for &'a PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn mul(self, rhs: &'a PowerSeries<T>) -> PowerSeries<T> {
        let n = self.order().min(rhs.order());
        let mut out = PowerSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &a.mul_ref(b);
                }
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn neg(self) -> PowerSeries<T> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for PowerSeries<T> {
            type Output = PowerSeries<T>;
            fn $method(self, rhs: PowerSeries<T>) -> PowerSeries<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn neg(self) -> PowerSeries<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::XSeries;

    fn xs(c: &[i64], n: usize) -> XSeries {
        XSeries::from_ints(c, n)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&xs(&[1, 1], 4) * &xs(&[1, -1], 4), xs(&[1, 0, -1], 4));
        let x4 = XSeries::monomial(rat(1), 4, 8);
        let x6 = XSeries::monomial(rat(1), 6, 8);
        assert!((&x4 * &x6).is_zero());
    }

    #[test]
    fn mixed_orders_use_minimum() {
        let a = xs(&[1, 2, 3, 4], 3);
        let b = xs(&[1, 1], 1);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(&a + &b, xs(&[2, 3], 1));
    }

    #[test]
    fn division_examples() {
        assert_eq!(
            xs(&[1, 0, -1], 5).try_div(&xs(&[1, -1], 5)).unwrap(),
            xs(&[1, 1], 5)
        );
        assert_eq!(
            xs(&[1], 3).try_div(&xs(&[1, -1], 3)).unwrap(),
            xs(&[1, 1, 1, 1], 3)
        );
        let x3 = XSeries::monomial(rat(1), 3, 8);
        let x4 = XSeries::monomial(rat(1), 4, 8);
        assert!(matches!(
            x3.try_div(&x4),
            Err(SeriesError::NonDivisible {
                degree: 3,
                valuation: 4
            })
        ));
        assert!(matches!(
            x3.try_div(&XSeries::zero(8)),
            Err(SeriesError::ZeroValuation { order: 8 })
        ));
        // x^5 / x^4 drops four orders.
        let q = XSeries::monomial(rat(1), 5, 8).try_div(&x4).unwrap();
        assert_eq!(q, XSeries::monomial(rat(1), 1, 4));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(xs(&[1, 2, 1], 6).try_sqrt().unwrap(), xs(&[1, 1], 6));
        assert_eq!(xs(&[1, -4], 3).try_sqrt().unwrap(), xs(&[1, -2, -2, -4], 3));
        assert_eq!(xs(&[4], 0).try_sqrt().unwrap(), xs(&[2], 0));
        assert_eq!(
            xs(&[2, 1], 3).try_sqrt(),
            Err(SeriesError::NonSquareConstant)
        );
        assert_eq!(
            xs(&[-1, 1], 3).try_sqrt(),
            Err(SeriesError::NonSquareConstant)
        );
    }

    #[test]
    fn sqrt_over_floats() {
        let s = PowerSeries::<f64>::from_coeffs(vec![4.0, 4.0, 1.0], 5);
        let r = s.try_sqrt().unwrap();
        assert!((r.coeff(0) - 2.0).abs() < 1e-12);
        assert!((r.coeff(1) - 1.0).abs() < 1e-12);
        assert!(r.coeff(3).abs() < 1e-12);
    }

    #[test]
    fn monomial_div_examples() {
        let s = XSeries::from_terms([(4, rat(2)), (8, rat(3))], 12);
        assert_eq!(
            s.monomial_div(4).unwrap(),
            XSeries::from_terms([(0, rat(2)), (4, rat(3))], 8)
        );
        assert_eq!(XSeries::zero(8).monomial_div(4).unwrap(), XSeries::zero(4));
        assert_eq!(
            XSeries::monomial(rat(1), 2, 8).monomial_div(4),
            Err(SeriesError::Valuation {
                degree: 2,
                shift: 4
            })
        );
    }

    #[test]
    fn substitution() {
        // 1/(1−x) at x ↦ 2x² gives 1 + 2x² + 4x⁴
        let g = xs(&[1, 1, 1, 1, 1], 4).substitute_monomial(&rat(2), 2);
        assert_eq!(g, xs(&[1, 0, 2, 0, 4], 4));
    }
}
