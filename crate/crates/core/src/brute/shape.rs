use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::counts::Noses;

/// Cells `(c, diag − c)` for `lo ≤ c ≤ hi`. Cells of one run are diagonal
/// neighbours only, never edge-adjacent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Run {
    pub diag: i32,
    pub lo: i32,
    pub hi: i32,
}

impl Run {
    pub fn new(diag: i32, lo: i32, hi: i32) -> Self {
        Run { diag, lo, hi }
    }

    pub fn len(&self) -> u32 {
        (self.hi - self.lo + 1) as u32
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn cells(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        (self.lo..=self.hi).map(move |c| (c, self.diag - c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("a shape needs at least one cell")]
    Empty,
    #[error("run on diagonal {0} is empty")]
    EmptyRun(i32),
    #[error("diagonal indices must be consecutive")]
    NonConsecutive,
    #[error("diagonal {0} is not a contiguous run")]
    NotConvex(i32),
    #[error("cells are not edge-connected")]
    Disconnected,
    #[error("nose class is undefined for a single diagonal")]
    UndefinedForSingleDiagonal,
    #[error("malformed shape text: {0}")]
    Parse(String),
}

/// A diagonally convex polyomino as one run per diagonal, southwest to
/// northeast, translated so the first diagonal is 0 and the smallest column
/// is 0. Coordinates are `(column, row)` with rows growing north.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DcpShape {
    runs: Vec<Run>,
}

impl DcpShape {
    pub fn new(runs: Vec<Run>) -> Result<Self, ShapeError> {
        let first = runs.first().ok_or(ShapeError::Empty)?;
        for (i, run) in runs.iter().enumerate() {
            if run.is_empty() {
                return Err(ShapeError::EmptyRun(run.diag));
            }
            if run.diag != first.diag + i as i32 {
                return Err(ShapeError::NonConsecutive);
            }
        }
        if !is_connected(&cells_of(&runs)) {
            return Err(ShapeError::Disconnected);
        }
        Ok(DcpShape {
            runs: normalize(&runs),
        })
    }

    pub fn from_cells<I: IntoIterator<Item = (i32, i32)>>(cells: I) -> Result<Self, ShapeError> {
        let mut cells: Vec<(i32, i32)> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(ShapeError::Empty);
        }
        cells.sort_by_key(|&(i, j)| (i + j, i));
        cells.dedup();
        let mut runs: Vec<Run> = Vec::new();
        for (i, j) in cells {
            let diag = i + j;
            match runs.last_mut() {
                Some(run) if run.diag == diag => {
                    if i != run.hi + 1 {
                        return Err(ShapeError::NotConvex(diag));
                    }
                    run.hi = i;
                }
                _ => runs.push(Run::new(diag, i, i)),
            }
        }
        Self::new(runs)
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn diagonals(&self) -> u32 {
        self.runs.len() as u32
    }

    pub fn cells(&self) -> Vec<(i32, i32)> {
        cells_of(&self.runs)
    }

    pub fn last_diag_size(&self) -> u32 {
        self.runs.last().unwrap().len()
    }

    /// `4·cells − 2·(edge-adjacent pairs)`, recomputed from the cell set.
    pub fn perimeter(&self) -> u32 {
        perimeter_of(&self.cells())
    }

    /// Nose count: `a` and `b` are the uppermost (smallest column) and
    /// rightmost (largest column) cells of the second-to-last diagonal; the
    /// noses are `a`'s upper and `b`'s right neighbour when present.
    pub fn nose_class(&self) -> Result<Noses, ShapeError> {
        let k = self.runs.len();
        if k < 2 {
            return Err(ShapeError::UndefinedForSingleDiagonal);
        }
        Ok(noses_between(
            (self.runs[k - 2].lo, self.runs[k - 2].hi),
            (self.runs[k - 1].lo, self.runs[k - 1].hi),
        ))
    }

    /// True iff every prefix of diagonals is edge-connected.
    pub fn is_directed(&self) -> bool {
        (1..=self.runs.len()).all(|k| is_connected(&cells_of(&self.runs[..k])))
    }

    /// `diag:lo-hi;diag:lo-hi;…`
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DcpShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, run) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}:{}-{}", run.diag, run.lo, run.hi)?;
        }
        Ok(())
    }
}

impl FromStr for DcpShape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let bad = || ShapeError::Parse(s.to_string());
        let runs = s
            .split(';')
            .map(|part| {
                let (diag, range) = part.split_once(':').ok_or_else(bad)?;
                let (lo, hi) = range.split_once('-').ok_or_else(bad)?;
                Ok(Run::new(
                    diag.parse().map_err(|_| bad())?,
                    lo.parse().map_err(|_| bad())?,
                    hi.parse().map_err(|_| bad())?,
                ))
            })
            .collect::<Result<Vec<_>, ShapeError>>()?;
        DcpShape::new(runs)
    }
}

pub(crate) fn noses_between(prev: (i32, i32), last: (i32, i32)) -> Noses {
    let (lo, hi) = prev;
    let upper = (last.0..=last.1).contains(&lo);
    let right = (last.0..=last.1).contains(&(hi + 1));
    match (upper, right) {
        (true, true) => Noses::Two,
        (false, false) => Noses::Zero,
        _ => Noses::One,
    }
}

/// Shifts so the first diagonal is 0 and the smallest column is 0. The
/// translation `(a, −a)` moves columns without changing diagonal indices.
fn normalize(runs: &[Run]) -> Vec<Run> {
    let d0 = runs[0].diag;
    let c0 = runs.iter().map(|r| r.lo).min().unwrap();
    // (i, j) ↦ (i − c0, j − d0 + c0)
    runs.iter()
        .map(|r| Run::new(r.diag - d0, r.lo - c0, r.hi - c0))
        .collect()
}

fn cells_of(runs: &[Run]) -> Vec<(i32, i32)> {
    runs.iter().flat_map(|r| r.cells()).collect()
}

const NEIGHBOURS: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

pub(crate) fn is_connected(cells: &[(i32, i32)]) -> bool {
    let set: HashSet<(i32, i32)> = cells.iter().copied().collect();
    let Some(&start) = cells.first() else {
        return false;
    };
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((i, j)) = queue.pop_front() {
        for (di, dj) in NEIGHBOURS {
            let n = (i + di, j + dj);
            if set.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == set.len()
}

pub(crate) fn perimeter_of(cells: &[(i32, i32)]) -> u32 {
    let set: HashSet<(i32, i32)> = cells.iter().copied().collect();
    let adjacent = set
        .iter()
        .filter(|&&(i, j)| set.contains(&(i + 1, j)))
        .count()
        + set
            .iter()
            .filter(|&&(i, j)| set.contains(&(i, j + 1)))
            .count();
    (4 * set.len() - 2 * adjacent) as u32
}
