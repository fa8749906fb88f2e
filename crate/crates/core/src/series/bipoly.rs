//! Polynomials in `d` and `x`, truncated in `x`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::PowerSeries;
use crate::scalar::Scalar;

/// Sparse `Σ c_{k,p} d^k x^p` with `p ≤ order`; no zero coefficient is stored.
#[derive(Clone, PartialEq, Debug)]
pub struct DxPoly<T> {
    order: usize,
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> DxPoly<T> {
    pub fn zero(order: usize) -> Self {
        DxPoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    /// `c·d^k·x^p`.
    pub fn monomial(c: T, d_pow: u32, x_pow: usize, order: usize) -> Self {
        let mut out = Self::zero(order);
        out.add_term(d_pow, x_pow, &c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, usize, T)>>(terms: I, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (k, p, c) in terms {
            out.add_term(k, p, &c);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d_pow: u32, x_pow: usize) -> T {
        self.terms
            .get(&(d_pow, x_pow as u32))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Nonzero terms as `((d_pow, x_pow), coefficient)`, ordered by `d` then `x`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &T)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d_pow: u32, x_pow: usize, c: &T) {
        if x_pow > self.order || c.is_zero() {
            return;
        }
        let key = (d_pow, x_pow as u32);
        let slot = self.terms.entry(key).or_insert_with(T::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        DxPoly {
            order,
            terms: self
                .terms
                .iter()
                .filter(|(&(_, p), _)| p as usize <= order)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    pub fn x_valuation(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, p)| p as usize).min()
    }

    pub fn d_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(k, _)| k).max()
    }

    /// Multiplies by `c·d^k·x^p`.
    pub fn mul_monomial(&self, c: &T, d_pow: u32, x_pow: usize) -> Self {
        let mut out = Self::zero(self.order);
        if c.is_zero() {
            return out;
        }
        for (&(k, p), v) in &self.terms {
            let p = p as usize + x_pow;
            if p <= self.order {
                out.terms.insert((k + d_pow, p as u32), v.mul_ref(c));
            }
        }
        out
    }

    /// Substitutes a scalar for `d`.
    pub fn eval_d(&self, d: &T) -> PowerSeries<T> {
        let mut coeffs = vec![T::zero(); self.order + 1];
        let mut powers = vec![T::one()];
        for (&(k, p), v) in &self.terms {
            while powers.len() <= k as usize {
                let next = powers.last().unwrap().mul_ref(d);
                powers.push(next);
            }
            coeffs[p as usize] += &v.mul_ref(&powers[k as usize]);
        }
        PowerSeries::from_coeffs(coeffs, self.order)
    }

    /// Coefficient of `x^p` as a polynomial in `d`, listed by `d`-power.
    pub fn x_slice(&self, x_pow: usize) -> BTreeMap<u32, T> {
        self.terms
            .iter()
            .filter(|(&(_, p), _)| p as usize == x_pow)
            .map(|(&(k, _), v)| (k, v.clone()))
            .collect()
    }

    pub fn map<U: Scalar, F: FnMut(&T) -> U>(&self, mut f: F) -> DxPoly<U> {
        let mut out = DxPoly::zero(self.order);
        for (&(k, p), v) in &self.terms {
            out.add_term(k, p as usize, &f(v));
        }
        out
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (&(k, p), v) in &rhs.terms {
            if negate {
                out.add_term(k, p as usize, &-v.clone());
            } else {
                out.add_term(k, p as usize, v);
            }
        }
        out
    }
}

impl<'a, T: Scalar> Add<&'a DxPoly<T>> for &'a DxPoly<T> {
    type Output = DxPoly<T>;
    fn add(self, rhs: &'a DxPoly<T>) -> DxPoly<T> {
        self.combine(rhs, false)
    }
}

impl<'a, T: Scalar> Sub<&'a DxPoly<T>> for &'a DxPoly<T> {
    type Output = DxPoly<T>;
    fn sub(self, rhs: &'a DxPoly<T>) -> DxPoly<T> {
        self.combine(rhs, true)
    }
}

impl<'a, T: Scalar> Mul<&'a DxPoly<T>> for &'a DxPoly<T> {
    type Output = DxPoly<T>;
    fn mul(self, rhs: &'a DxPoly<T>) -> DxPoly<T> {
        let order = self.order.min(rhs.order);
        let mut out = DxPoly::zero(order);
        for (&(k1, p1), a) in &self.terms {
            for (&(k2, p2), b) in &rhs.terms {
                let p = (p1 + p2) as usize;
                if p <= order {
                    out.add_term(k1 + k2, p, &a.mul_ref(b));
                }
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &DxPoly<T> {
    type Output = DxPoly<T>;
    fn neg(self) -> DxPoly<T> {
        self.map(|v| -v.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for DxPoly<T> {
            type Output = DxPoly<T>;
            fn $method(self, rhs: DxPoly<T>) -> DxPoly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
