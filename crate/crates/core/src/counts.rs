//! Exact count tables keyed by perimeter, diagonals, nose class and
//! last-diagonal size, plus the `n a(n)` b-file format.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

/// Nose class of a polyomino with at least two diagonals; `Single` marks
/// the one-celled polyomino, for which noses are undefined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Noses {
    Single,
    Zero,
    One,
    Two,
}

impl Noses {
    pub fn as_str(self) -> &'static str {
        match self {
            Noses::Single => "single",
            Noses::Zero => "zero",
            Noses::One => "one",
            Noses::Two => "two",
        }
    }
}

impl fmt::Display for Noses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountKey {
    pub perimeter: u32,
    pub diagonals: u32,
    pub noses: Noses,
    pub last_diag: u32,
}

/// Exact counts with marginalization. Zero counts are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    entries: BTreeMap<CountKey, BigUint>,
}

/// A sequence `n ↦ a(n)`, e.g. counts by perimeter.
pub type Sequence = BTreeMap<u32, BigUint>;

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, key: CountKey, count: impl Into<BigUint>) {
        let count = count.into();
        if count.is_zero() {
            return;
        }
        *self.entries.entry(key).or_default() += count;
    }

    /// Associative, order-independent merge.
    pub fn merge(&mut self, other: &CountTable) {
        for (k, v) in &other.entries {
            self.add(*k, v.clone());
        }
    }

    pub fn get(&self, key: &CountKey) -> BigUint {
        self.entries.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CountKey, &BigUint)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Keeps only keys with perimeter at most `max_perimeter`.
    pub fn restrict(&self, max_perimeter: u32) -> CountTable {
        CountTable {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| k.perimeter <= max_perimeter)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn marginal<K: Ord, F: Fn(&CountKey) -> K>(&self, project: F) -> BTreeMap<K, BigUint> {
        let mut out: BTreeMap<K, BigUint> = BTreeMap::new();
        for (k, v) in &self.entries {
            *out.entry(project(k)).or_default() += v;
        }
        out
    }

    pub fn by_perimeter(&self) -> Sequence {
        self.marginal(|k| k.perimeter)
    }

    pub fn by_perimeter_diagonals(&self) -> BTreeMap<(u32, u32), BigUint> {
        self.marginal(|k| (k.perimeter, k.diagonals))
    }

    pub fn by_perimeter_noses(&self) -> BTreeMap<(u32, Noses), BigUint> {
        self.marginal(|k| (k.perimeter, k.noses))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected `n a(n)`")]
    Malformed { line: usize },
    #[error("line {line}: indices must be strictly ascending")]
    NotAscending { line: usize },
}

/// One `n a(n)` line per entry, ascending `n`, no header.
pub fn emit_bfile(seq: &Sequence) -> String {
    let mut out = String::new();
    for (n, a) in seq {
        out.push_str(&format!("{n} {a}\n"));
    }
    out
}

pub fn parse_bfile(text: &str) -> Result<Sequence, BFileError> {
    let mut out = Sequence::new();
    let mut last: Option<u32> = None;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut parts = line.split(' ');
        let (Some(n), Some(a), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(BFileError::Malformed { line: line_no });
        };
        let n = u32::from_str(n).map_err(|_| BFileError::Malformed { line: line_no })?;
        let a = BigUint::from_str(a).map_err(|_| BFileError::Malformed { line: line_no })?;
        if last.is_some_and(|l| l >= n) {
            return Err(BFileError::NotAscending { line: line_no });
        }
        last = Some(n);
        out.insert(n, a);
    }
    Ok(out)
}
