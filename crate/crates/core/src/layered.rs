//! Layered functional equations for `A(z)`, `B(z)`, `C(z)`, solved by
//! fixed-point iteration under truncation in `x`.
//!
//! `A`, `B` and `C` are the full generating functions of polyominoes with at
//! least two diagonals and two, one or zero noses. The exponent of `d` is the
//! number of diagonals, of `x` the perimeter and of `z` the size of the last
//! diagonal.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::counts::{CountKey, CountTable, Noses, Sequence};
use crate::series::{Coeff, DxCoeff, PowerSeries, ZPoly};
use crate::BiPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayeredError {
    #[error("truncation order {0} is below 4")]
    OrderTooSmall(usize),
    #[error("fixed-point iteration did not settle after {iterations} steps")]
    NonConvergence { iterations: usize },
}

#[derive(Clone, PartialEq, Debug)]
pub struct GfTriple<C> {
    pub a: ZPoly<C>,
    pub b: ZPoly<C>,
    pub c: ZPoly<C>,
}

impl<C: DxCoeff> GfTriple<C> {
    pub fn zero(order: usize) -> Self {
        GfTriple {
            a: ZPoly::zero(order),
            b: ZPoly::zero(order),
            c: ZPoly::zero(order),
        }
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }

    pub fn components(&self) -> [(Noses, &ZPoly<C>); 3] {
        [
            (Noses::Two, &self.a),
            (Noses::One, &self.b),
            (Noses::Zero, &self.c),
        ]
    }
}

/// One application of the right-hand sides of the three equations.
pub fn rhs_step<C: DxCoeff>(g: &GfTriple<C>) -> GfTriple<C> {
    let n = g.order();
    let x4 = C::term(1, 0, 4, n);
    let geo = |s: &ZPoly<C>| s.div_one_minus(&x4);
    let mono = |c: i64, k: u32, p: usize, m: usize| ZPoly::<C>::monomial(c, k, p, m, n);

    let (a, b, c) = (&g.a, &g.b, &g.c);
    let tail_a = a.tail_sum();
    let tail_b = b.tail_sum();
    let tail_c = c.tail_sum();

    // A = d²x⁸z²/(1−x⁴z) + dx⁴z/(1−x⁴z)²·A + dx⁴z/(1−x⁴z)·B + dx⁴z·C
    let inner = [
        mono(1, 2, 8, 2),
        b.mul_term(1, 1, 4, 1),
        geo(&a.mul_term(1, 1, 4, 1)),
    ];
    let new_a = &geo(&sum(inner, n)) + &c.mul_term(1, 1, 4, 1);

    // B = 2d²x⁶z/(1−x⁴z) + 2dx²z/((1−z)(1−x⁴z))·[A(1)−A(z)] + 2dx⁶z/(1−x⁴z)²·A
    //   + dx²z/((1−z)(1−x⁴z))·[B(1)−B(z)] + dx²z/(1−z)·[B(1)−B(z)]
    //   + dx⁶z/(1−x⁴z)·B + 2dx²z/(1−z)·[C(1)−C(z)]
    let inner = [
        mono(2, 2, 6, 1),
        tail_a.mul_term(2, 1, 2, 1),
        geo(&a.mul_term(2, 1, 6, 1)),
        tail_b.mul_term(1, 1, 2, 1),
        b.mul_term(1, 1, 6, 1),
    ];
    let outer = [
        geo(&sum(inner, n)),
        tail_b.mul_term(1, 1, 2, 1),
        tail_c.mul_term(2, 1, 2, 1),
    ];
    let new_b = sum(outer, n);

    // C = d²x⁸z/(1−x⁴z) + d·Φ₂[A] + 2dx⁴z/((1−z)(1−x⁴z))·[A(1)−A(z)]
    //   + dx⁸z/(1−x⁴z)²·A + d·Φ₂[B] + dx⁴z/((1−z)(1−x⁴z))·[B(1)−B(z)] + d·Φ₂[C]
    let inner = [
        mono(1, 2, 8, 1),
        tail_a.mul_term(2, 1, 4, 1),
        geo(&a.mul_term(1, 1, 8, 1)),
        tail_b.mul_term(1, 1, 4, 1),
    ];
    let outer = [
        geo(&sum(inner, n)),
        a.tail_weighted().mul_term(1, 1, 0, 0),
        b.tail_weighted().mul_term(1, 1, 0, 0),
        c.tail_weighted().mul_term(1, 1, 0, 0),
    ];
    let new_c = sum(outer, n);

    GfTriple {
        a: new_a,
        b: new_b,
        c: new_c,
    }
}

fn sum<C: Coeff, const K: usize>(parts: [ZPoly<C>; K], order: usize) -> ZPoly<C> {
    parts.iter().fold(ZPoly::zero(order), |acc, p| &acc + p)
}

/// Picard iteration from the zero triple to the exact fixed point.
///
/// Iteration `j` is exact for every polyomino with at most `j + 1`
/// diagonals, and `k` diagonals force perimeter at least `2k + 2`, so the
/// iteration settles within `order/2 + 1` steps.
pub fn solve<C: DxCoeff>(order: usize) -> Result<GfTriple<C>, LayeredError> {
    if order < 4 {
        return Err(LayeredError::OrderTooSmall(order));
    }
    let max_z = (order - 2) / 2;
    let mut g = GfTriple::<C>::zero(order);
    for _ in 0..=order {
        let next = rhs_step(&g);
        for (_, comp) in next.components() {
            assert!(
                comp.degree().is_none_or(|m| m <= max_z),
                "last diagonal exceeds the perimeter bound"
            );
            for (m, coeff) in comp.coeffs().iter().enumerate() {
                assert!(
                    coeff.check_terms(&|k, p| p >= 2 * m + 2
                        && k.is_none_or(|k| k >= 2 && p >= 2 * k as usize + 2)),
                    "term violates the perimeter lower bound"
                );
            }
        }
        if next == g {
            return Ok(g);
        }
        g = next;
    }
    Err(LayeredError::NonConvergence {
        iterations: order + 1,
    })
}

/// `D = d·x⁴ + A(1) + B(1) + C(1)`.
pub fn total_gf<C: DxCoeff>(g: &GfTriple<C>) -> C {
    let mut total = C::term(1, 1, 4, g.order());
    for (_, comp) in g.components() {
        total.add_assign_ref(&comp.eval_z1());
    }
    total
}

/// Residuals of `A(1)·(1 − (2+δ)x⁴ + x⁸) − δx⁴(1−x⁴)[δx⁴ + B(1) + (1−x⁴)C(1)]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation8Residuals {
    /// `δ = d`: the relation's `d²` read as this crate's `d`.
    pub substituted: BiPoly,
    /// `δ = d²`: the relation taken literally.
    pub literal: BiPoly,
}

pub fn relation8_residual(g: &GfTriple<BiPoly>) -> Relation8Residuals {
    let n = g.order();
    let a1 = g.a.eval_z1();
    let b1 = g.b.eval_z1();
    let c1 = g.c.eval_z1();
    let int = |c: i64| BigInt::from(c);
    let one_minus_x4 = BiPoly::from_terms([(0, 0, int(1)), (0, 4, int(-1))], n);
    let residual = |delta: u32| {
        let den = BiPoly::from_terms(
            [
                (0, 0, int(1)),
                (0, 4, int(-2)),
                (delta, 4, int(-1)),
                (0, 8, int(1)),
            ],
            n,
        );
        let bracket = &(&BiPoly::monomial(int(1), delta, 4, n) + &b1) + &(&one_minus_x4 * &c1);
        let rhs = &(&BiPoly::monomial(int(1), delta, 4, n) * &one_minus_x4) * &bracket;
        &(&a1 * &den) - &rhs
    };
    Relation8Residuals {
        substituted: residual(1),
        literal: residual(2),
    }
}

/// Joint counts keyed by (perimeter, diagonals, noses, last-diagonal size),
/// including the one-celled polyomino.
pub fn joint_table(g: &GfTriple<BiPoly>) -> CountTable {
    let mut table = CountTable::new();
    if g.order() >= 4 {
        table.add(
            CountKey {
                perimeter: 4,
                diagonals: 1,
                noses: Noses::Single,
                last_diag: 1,
            },
            1u32,
        );
    }
    for (noses, comp) in g.components() {
        for (m, coeff) in comp.coeffs().iter().enumerate() {
            for ((k, p), v) in coeff.terms() {
                let count = v.to_biguint().expect("layered counts are nonnegative");
                table.add(
                    CountKey {
                        perimeter: p,
                        diagonals: k,
                        noses,
                        last_diag: m as u32,
                    },
                    count,
                );
            }
        }
    }
    table
}

/// `dc_n` for `n ≤ max_perimeter`, computed with `d = 1`.
pub fn perimeter_counts(max_perimeter: usize) -> Result<Sequence, LayeredError> {
    let g = solve::<PowerSeries<BigInt>>(max_perimeter)?;
    let total = total_gf(&g);
    Ok(total
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| {
            assert!(!c.is_negative());
            (n as u32, c.to_biguint().unwrap())
        })
        .collect())
}

pub fn nose_breakdown(max_perimeter: usize) -> Result<CountTable, LayeredError> {
    Ok(joint_table(&solve::<BiPoly>(max_perimeter)?))
}

/// `D(d, x)` with `d` kept symbolic.
pub fn total_symbolic(max_perimeter: usize) -> Result<BiPoly, LayeredError> {
    Ok(total_gf(&solve::<BiPoly>(max_perimeter)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn int(c: i64) -> BigInt {
        BigInt::from(c)
    }

    #[test]
    fn seed_terms() {
        let g = rhs_step(&GfTriple::<BiPoly>::zero(16));
        assert_eq!(g.a.coeff(2).coeff(2, 8), int(1));
        assert_eq!(g.a.coeff(3).coeff(2, 12), int(1));
        assert_eq!(g.a.coeff(1), BiPoly::zero(16));
        assert_eq!(g.b.coeff(1).coeff(2, 6), int(2));
        assert_eq!(g.b.coeff(1).x_valuation(), Some(6));
        assert_eq!(g.c.coeff(1).coeff(2, 8), int(1));
        assert_eq!(g.c.coeff(1).x_valuation(), Some(8));
    }

    #[test]
    fn small_totals() {
        let total = total_symbolic(8).unwrap().eval_d(&int(1));
        assert_eq!(
            total.coeffs()[4..=8],
            [int(1), int(0), int(2), int(0), int(7)]
        );
        assert_eq!(perimeter_counts(12).unwrap()[&12], BigUint::from(122u32));
    }

    #[test]
    fn one_cell_and_dominoes() {
        let total = total_symbolic(10).unwrap();
        assert_eq!(total.coeff(1, 4), int(1));
        assert_eq!(total.coeff(2, 6), int(2));
        let x6: BigInt = total.x_slice(6).values().sum();
        assert_eq!(x6, int(2));
    }

    #[test]
    fn fixed_point_is_stable() {
        let g = solve::<BiPoly>(18).unwrap();
        assert_eq!(rhs_step(&g), g);
    }

    #[test]
    fn truncation_consistency() {
        let big = solve::<BiPoly>(20).unwrap();
        let small = solve::<BiPoly>(14).unwrap();
        let cut = |z: &ZPoly<BiPoly>| {
            ZPoly::from_coeffs(z.coeffs().iter().map(|c| c.truncate(14)).collect(), 14)
        };
        assert_eq!(cut(&big.a), small.a);
        assert_eq!(cut(&big.b), small.b);
        assert_eq!(cut(&big.c), small.c);
    }

    #[test]
    fn coefficients_nonnegative_and_bounded() {
        let g = solve::<BiPoly>(20).unwrap();
        for (_, comp) in g.components() {
            for coeff in comp.coeffs() {
                for ((k, p), v) in coeff.terms() {
                    assert!(v.is_positive());
                    assert!(k >= 2 && p >= 6 && p >= 2 * k + 2);
                }
            }
        }
        for ((k, p), _) in total_gf(&g).terms() {
            assert!(p >= 2 * k + 2);
        }
    }

    #[test]
    fn nose_classes_at_small_perimeter() {
        let t = nose_breakdown(8).unwrap();
        let two = CountKey {
            perimeter: 8,
            diagonals: 2,
            noses: Noses::Two,
            last_diag: 2,
        };
        assert_eq!(t.get(&two), BigUint::from(1u32));
        assert_eq!(t.by_perimeter()[&8], BigUint::from(7u32));
    }

    #[test]
    fn relation8_trivial_below_two_diagonals() {
        let r = relation8_residual(&GfTriple::<BiPoly>::zero(4));
        assert!(r.substituted.is_zero() && r.literal.is_zero());
        assert_eq!(solve::<BiPoly>(3), Err(LayeredError::OrderTooSmall(3)));
    }
}
