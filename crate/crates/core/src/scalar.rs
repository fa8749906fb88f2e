//! Scalar traits shared by every series type in the crate.
//!
//! Series arithmetic is written once against [`Scalar`] (a commutative ring
//! with an integer embedding) and [`Field`] (adds exact division). Square
//! roots of series need [`ExactSqrt`] on the constant term only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_int(k: i64) -> Self {
        Self::from_i64(k).expect("every scalar type embeds the integers")
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out *= rhs;
        out
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Send
        + Sync
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
{
}

/// A scalar with exact division by nonzero elements.
pub trait Field: Scalar + for<'a> DivAssign<&'a Self> {
    fn div_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out /= rhs;
        out
    }
}

impl Field for BigRational {}
impl Field for f64 {}
impl Field for f32 {}
impl Field for QuadExt {}

/// Square root inside the scalar's own field, choosing the positive branch.
pub trait ExactSqrt: Sized {
    fn exact_sqrt(&self) -> Option<Self>;
}

impl ExactSqrt for BigInt {
    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let r = self.sqrt();
        (&r * &r == *self).then_some(r)
    }
}

impl ExactSqrt for BigRational {
    fn exact_sqrt(&self) -> Option<Self> {
        let n = self.numer().exact_sqrt()?;
        let d = self.denom().exact_sqrt()?;
        Some(BigRational::new(n, d))
    }
}

impl ExactSqrt for f64 {
    fn exact_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
}

impl ExactSqrt for f32 {
    fn exact_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
}

/// Shorthand for `BigRational::from_integer`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An element `rat + irr·√radicand` of the quadratic field Q(√radicand).
///
/// Elements with `irr = 0` are plain rationals and may omit the radicand;
/// they combine freely with elements of any field. Mixing two different
/// radicands panics.
#[derive(Clone, Debug)]
pub struct QuadExt {
    rat: BigRational,
    irr: BigRational,
    radicand: Option<BigRational>,
}

impl QuadExt {
    pub fn new(rat: BigRational, irr: BigRational, radicand: BigRational) -> Self {
        assert!(radicand.is_positive(), "radicand must be positive");
        QuadExt {
            rat,
            irr,
            radicand: Some(radicand),
        }
    }

    /// A rational number that carries the field it lives in.
    pub fn rational_in(rat: BigRational, radicand: &BigRational) -> Self {
        Self::new(rat, BigRational::zero(), radicand.clone())
    }

    /// `√radicand` itself.
    pub fn root_of(radicand: &BigRational) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), radicand.clone())
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.irr
    }

    pub fn radicand(&self) -> Option<&BigRational> {
        self.radicand.as_ref()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.irr.is_zero().then(|| self.rat.clone())
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            rat: self.rat.clone(),
            irr: -self.irr.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// `rat² − irr²·radicand`, the product with the conjugate.
    pub fn norm(&self) -> BigRational {
        let s = self.radicand.clone().unwrap_or_else(BigRational::zero);
        &self.rat * &self.rat - &self.irr * &self.irr * s
    }

    /// Sign of the real number under the embedding with `√radicand > 0`.
    pub fn signum_real(&self) -> Ordering {
        let a = self.rat.cmp(&BigRational::zero());
        let b = self.irr.cmp(&BigRational::zero());
        if b == Ordering::Equal || a == b {
            return if a == Ordering::Equal { b } else { a };
        }
        if a == Ordering::Equal {
            return b;
        }
        // Opposite signs: the larger magnitude wins.
        let s = self
            .radicand
            .as_ref()
            .expect("irrational part needs a radicand");
        let lhs = &self.rat * &self.rat;
        let rhs = &self.irr * &self.irr * s;
        match lhs.cmp(&rhs) {
            Ordering::Greater => a,
            Ordering::Less => b,
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn join(a: &Option<BigRational>, b: &Option<BigRational>) -> Option<BigRational> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixed elements of two different quadratic fields");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    fn s(&self) -> BigRational {
        self.radicand.clone().unwrap_or_else(BigRational::zero)
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.rat == other.rat
            && self.irr == other.irr
            && (self.irr.is_zero() || self.radicand == other.radicand)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.radicand {
            Some(s) if !self.irr.is_zero() => write!(f, "{} + {}·√{}", self.rat, self.irr, s),
            _ => write!(f, "{}", self.rat),
        }
    }
}

impl<'a> AddAssign<&'a QuadExt> for QuadExt {
    fn add_assign(&mut self, rhs: &'a QuadExt) {
        self.radicand = Self::join(&self.radicand, &rhs.radicand);
        self.rat += &rhs.rat;
        self.irr += &rhs.irr;
    }
}

impl<'a> SubAssign<&'a QuadExt> for QuadExt {
    fn sub_assign(&mut self, rhs: &'a QuadExt) {
        self.radicand = Self::join(&self.radicand, &rhs.radicand);
        self.rat -= &rhs.rat;
        self.irr -= &rhs.irr;
    }
}

impl<'a> MulAssign<&'a QuadExt> for QuadExt {
    fn mul_assign(&mut self, rhs: &'a QuadExt) {
        let radicand = Self::join(&self.radicand, &rhs.radicand);
        let s = radicand.clone().unwrap_or_else(BigRational::zero);
        let rat = &self.rat * &rhs.rat + &self.irr * &rhs.irr * s;
        let irr = &self.rat * &rhs.irr + &self.irr * &rhs.rat;
        *self = QuadExt { rat, irr, radicand };
    }
}

impl<'a> DivAssign<&'a QuadExt> for QuadExt {
    fn div_assign(&mut self, rhs: &'a QuadExt) {
        let norm = rhs.norm();
        assert!(!norm.is_zero(), "division by zero in quadratic field");
        *self *= &rhs.conjugate();
        self.rat /= &norm;
        self.irr /= &norm;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $method(mut self, rhs: QuadExt) -> QuadExt {
                self.$assign(&rhs);
                self
            }
        }
    };
}

forward_owned!(Add, add, add_assign);
forward_owned!(Sub, sub, sub_assign);
forward_owned!(Mul, mul, mul_assign);
forward_owned!(Div, div, div_assign);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            rat: -self.rat,
            irr: -self.irr,
            radicand: self.radicand,
        }
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt {
            rat: BigRational::zero(),
            irr: BigRational::zero(),
            radicand: None,
        }
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt {
            rat: BigRational::one(),
            irr: BigRational::zero(),
            radicand: None,
        }
    }
}

impl FromPrimitive for QuadExt {
    fn from_i64(n: i64) -> Option<Self> {
        Some(QuadExt {
            rat: rat(n),
            irr: BigRational::zero(),
            radicand: None,
        })
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(QuadExt {
            rat: BigRational::from_integer(BigInt::from(n)),
            irr: BigRational::zero(),
            radicand: None,
        })
    }
}

impl From<BigRational> for QuadExt {
    fn from(rat: BigRational) -> Self {
        QuadExt {
            rat,
            irr: BigRational::zero(),
            radicand: None,
        }
    }
}

impl ExactSqrt for QuadExt {
    fn exact_sqrt(&self) -> Option<Self> {
        let s = self.s();
        let (p, q) = if self.irr.is_zero() {
            if let Some(p) = self.rat.exact_sqrt() {
                (p, BigRational::zero())
            } else if s.is_zero() {
                return None;
            } else {
                (BigRational::zero(), (&self.rat / &s).exact_sqrt()?)
            }
        } else {
            // (p + q√s)² = p² + q²s + 2pq√s
            let t = self.norm().exact_sqrt()?;
            let two = rat(2);
            [(&self.rat + &t) / &two, (&self.rat - &t) / &two]
                .iter()
                .filter_map(|c| c.exact_sqrt())
                .find(|p| !p.is_zero())
                .map(|p| {
                    let q = &self.irr / (&p * &two);
                    (p, q)
                })?
        };
        let root = QuadExt {
            rat: p,
            irr: q,
            radicand: self.radicand.clone(),
        };
        debug_assert!(root.mul_ref(&root) == *self);
        Some(if root.signum_real() == Ordering::Less {
            -root
        } else {
            root
        })
    }
}

/// Lossy conversion used only for human-readable summaries.
pub fn approx_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
