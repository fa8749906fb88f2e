//! Exhaustive generation: the independent ground truth for the layered
//! series and for the column-convex closed forms.

mod column_convex;
mod generate;
mod shape;

pub use column_convex::column_convex_counts;
pub use generate::{
    dump_shapes, generate, generate_with_threads, generate_within, visit_shapes, Limits, Visit,
};
pub use shape::{DcpShape, Run, ShapeError};

use num_bigint::BigUint;

/// Number of directed polyominoes with exactly `k` diagonals, `k = 1..=k_max`.
///
/// A directed polyomino with `k` diagonals has at most `i` cells on its
/// `i`-th diagonal and every new cell touches the previous diagonal, so its
/// perimeter is at most `k(k + 1) + 2`.
pub fn directed_counts_by_diagonals(k_max: u32) -> Vec<BigUint> {
    let limits = Limits {
        max_perimeter: k_max * (k_max + 1) + 2,
        max_diagonals: k_max,
    };
    let mut counts = vec![0u64; k_max as usize];
    visit_shapes(limits, |v| {
        if v.to_shape().is_directed() {
            counts[v.diagonals() as usize - 1] += 1;
        }
    });
    counts.into_iter().map(BigUint::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_small() {
        let got: Vec<u32> = directed_counts_by_diagonals(3)
            .into_iter()
            .map(|c| u32::try_from(c).unwrap())
            .collect();
        assert_eq!(got, vec![1, 3, 12]);
    }
}
