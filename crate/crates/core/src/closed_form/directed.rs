//! Directed diagonally convex polyominoes counted by diagonals.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::series::PowerSeries;

/// `E(d, 1, 1)` from the fixed point of `E = d(E+1)(E+x)(E+y)` at
/// `x = y = 1`, truncated at `d^order`. Each step fixes one more coefficient.
pub fn directed_e(order: usize) -> PowerSeries<BigInt> {
    let one = PowerSeries::one(order);
    let d = PowerSeries::monomial(BigInt::one(), 1, order);
    let mut e = PowerSeries::zero(order);
    for _ in 0..=order {
        let f = &e + &one;
        let next = &d * &(&(&f * &f) * &f);
        if next == e {
            break;
        }
        e = next;
    }
    e
}

/// `C(3k+1, k) / (3k+1)`, the number of ternary trees with `k` nodes.
pub fn ternary_count(k: u32) -> BigUint {
    let n = 3 * k + 1;
    let mut binom = BigUint::one();
    for i in 0..k {
        binom = binom * (n - i) / (i + 1);
    }
    binom / n
}
