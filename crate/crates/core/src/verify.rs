//! Named verification suites. Each check reports the first offending
//! coefficient when it fails.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::brute::{column_convex_counts, directed_counts_by_diagonals, generate};
use crate::closed_form::{
    column_convex_f, directed_e, first_non_integral, kernel_product, kernel_residuals, radicals,
    roots, symmetric_identities, ternary_count, ClosedFormError, Variant,
};
use crate::counts::Sequence;
use crate::layered::{joint_table, relation8_residual, solve, LayeredError};
use crate::scalar::{rat, ratio, Scalar};
use crate::series::PowerSeries;
use crate::{BiPoly, Rational, XSeries};

/// Diagonally convex polyominoes with perimeter 4, 6, …, 40.
pub const DIAGONALLY_CONVEX: [u64; 19] = [
    1,
    2,
    7,
    28,
    122,
    556,
    2618,
    12634,
    62128,
    310212,
    1568495,
    8014742,
    41323641,
    214719610,
    1123244757,
    5910863420,
    31268459118,
    166185855552,
    886961294034,
];

/// Column-convex polyominoes with perimeter 4, 6, …, 40.
pub const COLUMN_CONVEX: [u64; 19] = [
    1,
    2,
    7,
    28,
    122,
    558,
    2641,
    12822,
    63501,
    319554,
    1629321,
    8399092,
    43701735,
    229211236,
    1210561517,
    6432491192,
    34364148528,
    184463064936,
    994430028087,
];

/// Largest perimeter covered by the tables above.
pub const KNOWN_MAX: u32 = 40;

/// `{n: a(n)}` for the entries of a table above with `n ≤ max_n`.
pub fn known_sequence(table: &[u64], max_n: u32) -> Sequence {
    table
        .iter()
        .enumerate()
        .map(|(i, &c)| (4 + 2 * i as u32, BigUint::from(c)))
        .filter(|&(n, _)| n <= max_n)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Kernel,
    Relation8,
    ColumnConvex,
    Directed,
    Oracle,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "kernel",
        "relation8",
        "columnconvex",
        "directed",
        "oracle",
        "all",
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Kernel => "kernel",
            Suite::Relation8 => "relation8",
            Suite::ColumnConvex => "columnconvex",
            Suite::Directed => "directed",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }

    /// The brute-force oracle is exponential in the order, the series
    /// suites are not.
    pub fn default_order(self) -> usize {
        match self {
            Suite::Oracle => 16,
            _ => 40,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            Suite::Kernel,
            Suite::Relation8,
            Suite::ColumnConvex,
            Suite::Directed,
            Suite::Oracle,
            Suite::All,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
        .ok_or_else(|| {
            format!(
                "unknown suite `{s}` (expected one of {})",
                Self::NAMES.join(", ")
            )
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{}] {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("order {0} is too small for this suite")]
    OrderTooSmall(usize),
    #[error("oracle order must be even, got {0}")]
    OddOrder(usize),
    #[error(transparent)]
    Layered(#[from] LayeredError),
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// `None` picks each suite's default.
    pub order: Option<usize>,
    pub d_samples: Vec<Rational>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: None,
            d_samples: default_d_samples(),
        }
    }
}

pub fn default_d_samples() -> Vec<Rational> {
    vec![rat(1), ratio(1, 2), rat(2), rat(3)]
}

/// Parses `"1,1/2,2,3"`.
pub fn parse_d_samples(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Rational>()
                .map_err(|_| format!("`{t}` is not a rational number"))
        })
        .collect()
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>, VerifyError> {
    let order = opts.order.unwrap_or(suite.default_order());
    let mut out = Checks {
        suite,
        list: Vec::new(),
    };
    match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Kernel,
                Suite::Relation8,
                Suite::ColumnConvex,
                Suite::Directed,
                Suite::Oracle,
            ] {
                all.extend(run_suite(s, opts)?);
            }
            return Ok(all);
        }
        Suite::Kernel => kernel(&mut out, order, &opts.d_samples),
        Suite::Relation8 => relation8(&mut out, order)?,
        Suite::ColumnConvex => column_convex(&mut out, order),
        Suite::Directed => directed(&mut out),
        Suite::Oracle => oracle(&mut out, order)?,
    }
    Ok(out.list)
}

struct Checks {
    suite: Suite,
    list: Vec<Check>,
}

impl Checks {
    fn push(&mut self, name: impl Into<String>, failure: Option<String>) {
        let passed = failure.is_none();
        self.record(name, passed, failure.unwrap_or_default());
    }

    fn record(&mut self, name: impl Into<String>, passed: bool, detail: String) {
        self.list.push(Check {
            suite: self.suite,
            name: name.into(),
            passed,
            detail,
        });
    }

    fn zero<T: Scalar + fmt::Display>(&mut self, name: impl Into<String>, s: &PowerSeries<T>) {
        self.push(name, first_nonzero(s));
    }

    fn equal(&mut self, name: impl Into<String>, got: &Sequence, want: &Sequence) {
        self.push(name, first_difference(got, want));
    }

    fn error(&mut self, name: impl Into<String>, e: ClosedFormError) {
        self.push(name, Some(e.to_string()));
    }
}

fn first_nonzero<T: Scalar + fmt::Display>(s: &PowerSeries<T>) -> Option<String> {
    s.coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .map(|k| format!("coefficient of x^{k} is {}", s.coeff(k)))
}

fn first_difference(got: &Sequence, want: &Sequence) -> Option<String> {
    let zero = BigUint::zero();
    got.keys()
        .chain(want.keys())
        .copied()
        .collect::<std::collections::BTreeSet<u32>>()
        .into_iter()
        .find_map(|n| {
            let g = got.get(&n).unwrap_or(&zero);
            let w = want.get(&n).unwrap_or(&zero);
            (g != w).then(|| format!("at n={n}: got {g}, expected {w}"))
        })
}

fn up_to(seq: &Sequence, max_n: u32) -> Sequence {
    seq.range(..=max_n).map(|(n, c)| (*n, c.clone())).collect()
}

fn series_to_sequence(s: &XSeries) -> Result<Sequence, String> {
    let mut out = Sequence::new();
    for (n, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = c
            .is_integer()
            .then(|| c.to_integer().to_biguint())
            .flatten()
            .ok_or_else(|| format!("coefficient of x^{n} is {c}, not a count"))?;
        out.insert(n as u32, v);
    }
    Ok(out)
}

fn kernel(out: &mut Checks, order: usize, samples: &[Rational]) {
    for d in samples {
        match roots(d, order) {
            Ok(_) => out.push(
                format!("d={d} roots z2, z4, z6 have no negative x-exponents"),
                None,
            ),
            Err(e) => out.error(format!("d={d} roots"), e),
        }
        match kernel_residuals(d, order) {
            Ok(r) => {
                out.zero(format!("d={d} fa2(z2) = 0 to x^{order}"), &r.fa2_z2);
                out.zero(format!("d={d} fa3(z4) = 0 to x^{order}"), &r.fa3_z4);
                out.zero(format!("d={d} fa3(z6) = 0 to x^{order}"), &r.fa3_z6);
            }
            Err(e) => out.error(format!("d={d} kernel residuals"), e),
        }
        match symmetric_identities(d, order) {
            Ok(s) => {
                out.zero(format!("d={d} z4 + z6 closed form"), &s.sum);
                out.zero(format!("d={d} 1/z4 + 1/z6 closed form"), &s.reciprocal_sum);
                let [r0, r1] = &s.quadratic_remainder;
                out.push(
                    format!("d={d} fa3 divisible by (z - z4)(z - z6)"),
                    first_nonzero(r0)
                        .map(|m| format!("z^0 remainder: {m}"))
                        .or_else(|| first_nonzero(r1).map(|m| format!("z^1 remainder: {m}"))),
                );
            }
            Err(e) => out.error(format!("d={d} symmetric identities"), e),
        }
        match radicals(d, order) {
            Ok(r) => {
                out.zero(
                    format!("d={d} R1^2 = radicand"),
                    &(&(&r.r1 * &r.r1) - &r.r1_radicand),
                );
                out.zero(
                    format!("d={d} R2^2 = radicand"),
                    &(&(&r.r2 * &r.r2) - &r.r2_radicand),
                );
                out.zero(
                    format!("d={d} R3^2 = radicand"),
                    &(&(&r.r3 * &r.r3) - &r.r3_radicand),
                );
            }
            Err(e) => out.error(format!("d={d} radicals"), e.into()),
        }
        if d.is_integer() {
            // The product has x-degree at most 40.
            let p = kernel_product(d, 48);
            out.push(
                format!("d={d} fa1*fa2*fa3 has integer coefficients"),
                first_non_integral(&p).map(|(m, k)| format!("coefficient of z^{m} x^{k}")),
            );
        }
    }
}

fn relation8(out: &mut Checks, order: usize) -> Result<(), VerifyError> {
    let g = solve::<BiPoly>(order)?;
    let r = relation8_residual(&g);
    let first = |p: &BiPoly| {
        p.terms()
            .next()
            .map(|((k, n), c)| format!("coefficient of d^{k} x^{n} is {c}"))
    };
    out.push(
        format!("relation with d^2 read as d vanishes to x^{order}"),
        first(&r.substituted),
    );
    let name = format!("relation read literally is nonzero to x^{order}");
    match first(&r.literal) {
        Some(m) => out.record(name, true, m),
        // Every two-diagonal term has perimeter at least 8.
        None if order < 8 => out.record(name, true, "both readings vanish below x^8".into()),
        None => out.record(name, false, "literal reading also vanishes".into()),
    }
    Ok(())
}

fn column_convex(out: &mut Checks, order: usize) {
    let known = known_sequence(&COLUMN_CONVEX, order as u32);
    let mut on_diagonal = Vec::new();
    for v in Variant::ALL {
        match column_convex_f(v, &rat(1), order) {
            Ok(f) => {
                match series_to_sequence(&f) {
                    Ok(seq) => out.equal(
                        format!("{v} at y=x matches known counts"),
                        &up_to(&seq, KNOWN_MAX),
                        &known,
                    ),
                    Err(m) => out.push(format!("{v} at y=x matches known counts"), Some(m)),
                }
                on_diagonal.push((v, f));
            }
            Err(e) => out.error(format!("{v} at y=x"), e),
        }
    }
    for (a, fa) in &on_diagonal {
        for (b, fb) in &on_diagonal {
            if a.as_str() < b.as_str() {
                out.zero(format!("{a} = {b} at y=x"), &(fa - fb));
            }
        }
    }
    let half = ratio(1, 2);
    let off: Vec<_> = Variant::ALL
        .into_iter()
        .filter_map(|v| match column_convex_f(v, &half, order) {
            Ok(f) => Some((v, f)),
            Err(e) => {
                out.error(format!("{v} at y=x/2"), e);
                None
            }
        })
        .collect();
    for (a, fa) in &off {
        for (b, fb) in &off {
            if a.as_str() < b.as_str() {
                out.zero(format!("{a} = {b} at y=x/2"), &(fa - fb));
            }
        }
    }
    let brute_order = order.min(16) as u32;
    out.equal(
        format!("exhaustive column-convex counts to perimeter {brute_order}"),
        &column_convex_counts(brute_order),
        &known_sequence(&COLUMN_CONVEX, brute_order),
    );
}

fn directed(out: &mut Checks) {
    let e = directed_e(15);
    let failure = (1..=15u32).find_map(|k| {
        let want = BigInt::from(ternary_count(k));
        let got = e.coeff(k as usize);
        (got != want).then(|| format!("[d^{k}]E = {got}, expected {want}"))
    });
    out.push(
        "fixed point of E equals ternary tree counts for k <= 15",
        failure,
    );

    let brute = directed_counts_by_diagonals(4);
    let failure = brute.iter().enumerate().find_map(|(i, got)| {
        let want = ternary_count(i as u32 + 1);
        (*got != want).then(|| format!("k={}: exhaustive {got}, expected {want}", i + 1))
    });
    out.push("exhaustive directed counts for k <= 4", failure);
}

fn oracle(out: &mut Checks, order: usize) -> Result<(), VerifyError> {
    if order < 4 {
        return Err(VerifyError::OrderTooSmall(order));
    }
    if order % 2 == 1 {
        return Err(VerifyError::OddOrder(order));
    }
    let layered = joint_table(&solve::<BiPoly>(order)?);
    let brute = generate(order as u32);
    let failure = layered
        .iter()
        .map(|(k, _)| *k)
        .chain(brute.iter().map(|(k, _)| *k))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .find_map(|k| {
            let (l, b) = (layered.get(&k), brute.get(&k));
            (l != b).then(|| {
                format!(
                    "perimeter {} diagonals {} noses {} last {}: layered {l}, exhaustive {b}",
                    k.perimeter, k.diagonals, k.noses, k.last_diag
                )
            })
        });
    out.push(
        format!("layered and exhaustive joint tables agree to perimeter {order}"),
        failure,
    );
    let known = known_sequence(&DIAGONALLY_CONVEX, order as u32);
    out.equal(
        "layered perimeter counts match known counts",
        &up_to(&layered.by_perimeter(), KNOWN_MAX),
        &known,
    );
    out.equal(
        "exhaustive perimeter counts match known counts",
        &up_to(&brute.by_perimeter(), KNOWN_MAX),
        &known,
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().as_str(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn d_sample_parsing() {
        assert_eq!(parse_d_samples("1,1/2, 2,3").unwrap(), default_d_samples());
        assert!(parse_d_samples("1,x").is_err());
    }

    #[test]
    fn small_suites_pass() {
        let opts = VerifyOptions {
            order: Some(12),
            d_samples: vec![rat(1), rat(2)],
        };
        for suite in [
            Suite::Kernel,
            Suite::Relation8,
            Suite::ColumnConvex,
            Suite::Oracle,
        ] {
            let checks = run_suite(suite, &opts).unwrap();
            assert!(!checks.is_empty());
            for c in checks {
                assert!(c.passed, "{c}");
            }
        }
    }

    #[test]
    fn mismatch_reports_first_difference() {
        let got = known_sequence(&DIAGONALLY_CONVEX, 12);
        let mut want = got.clone();
        want.insert(10, BigUint::from(27u32));
        assert_eq!(
            first_difference(&got, &want).unwrap(),
            "at n=10: got 28, expected 27"
        );
    }

    #[test]
    fn odd_oracle_order_is_rejected() {
        let opts = VerifyOptions {
            order: Some(9),
            ..VerifyOptions::default()
        };
        assert_eq!(
            run_suite(Suite::Oracle, &opts),
            Err(VerifyError::OddOrder(9))
        );
    }
}
