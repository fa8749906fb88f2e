//! Fixed column-convex polyominoes by perimeter: each column is one
//! vertical run and consecutive columns share at least one horizontal edge.

use crate::counts::Sequence;
use num_bigint::BigUint;

struct Column {
    lo: i32,
    hi: i32,
    perimeter: u32,
    row_min: i32,
    row_max: i32,
    width: u32,
}

impl Column {
    fn lower_bound(&self) -> u32 {
        self.perimeter
            .max(2 * (self.width + (self.row_max - self.row_min + 1) as u32))
    }
}

fn extend(col: &Column, max_perimeter: u32, counts: &mut [u64]) {
    counts[col.perimeter as usize] += 1;
    // A new column of height h overlapping o cells adds 2h + 2 − 2o ≥ 2.
    let reach = (max_perimeter / 2) as i32;
    for lo in (col.lo - reach)..=col.hi {
        for hi in lo.max(col.lo)..=(col.hi + reach) {
            let h = (hi - lo + 1) as u32;
            let overlap = (hi.min(col.hi) - lo.max(col.lo) + 1) as u32;
            let next = Column {
                lo,
                hi,
                perimeter: col.perimeter + 2 * h + 2 - 2 * overlap,
                row_min: col.row_min.min(lo),
                row_max: col.row_max.max(hi),
                width: col.width + 1,
            };
            if next.lower_bound() > max_perimeter {
                break;
            }
            extend(&next, max_perimeter, counts);
        }
    }
}

/// `cc_n` for every even `n ≤ max_perimeter`.
pub fn column_convex_counts(max_perimeter: u32) -> Sequence {
    let mut counts = vec![0u64; max_perimeter as usize + 1];
    let mut h = 1;
    while 2 * h + 2 <= max_perimeter as i32 {
        let first = Column {
            lo: 0,
            hi: h - 1,
            perimeter: 2 * h as u32 + 2,
            row_min: 0,
            row_max: h - 1,
            width: 1,
        };
        extend(&first, max_perimeter, &mut counts);
        h += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c > 0)
        .map(|(n, c)| (n as u32, BigUint::from(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        let got: Vec<(u32, u64)> = column_convex_counts(12)
            .into_iter()
            .map(|(n, c)| (n, u64::try_from(c).unwrap()))
            .collect();
        assert_eq!(got, vec![(4, 1), (6, 2), (8, 7), (10, 28), (12, 122)]);
    }
}
