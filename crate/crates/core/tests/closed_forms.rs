use dcp_core::closed_form::{
    column_convex_f, directed_e, kernel_factors, kernel_residuals, radicals, ratio_table, roots,
    symmetric_identities, ternary_count, Variant,
};
use dcp_core::scalar::{rat, ratio};
use dcp_core::{QuadExt, Rational, XSeries};
use num_bigint::{BigInt, BigUint};

fn samples() -> Vec<Rational> {
    vec![rat(1), ratio(1, 2), rat(2), rat(3)]
}

#[test]
fn radical_examples() {
    let r = radicals(&rat(1), 6).unwrap();
    assert_eq!(r.r1, XSeries::from_ints(&[1, 0, 0, 0, -1, 0, -1], 6));
    assert_eq!(radicals(&rat(1), 0).unwrap().r3.coeff(0), rat(3));
    for d in [rat(1), rat(2)] {
        let r = radicals(&d, 40).unwrap();
        assert_eq!(&r.r1 * &r.r1, r.r1_radicand);
        assert_eq!(&r.r2 * &r.r2, r.r2_radicand);
        assert_eq!(&r.r3 * &r.r3, r.r3_radicand);
    }
}

#[test]
fn kernel_residuals_vanish_at_every_sample() {
    for d in samples() {
        let r = kernel_residuals(&d, 30).unwrap();
        assert!(r.fa2_z2.is_zero(), "d={d}");
        assert!(r.fa3_z4.is_zero(), "d={d}");
        assert!(r.fa3_z6.is_zero(), "d={d}");
    }
}

#[test]
fn roots_leave_the_rationals_only_through_one_radical() {
    let d = rat(1);
    let r = roots(&d, 12).unwrap();
    assert_eq!(r.field(), Some(rat(5)));
    assert_eq!(r.z2.coeff(0).to_rational(), Some(rat(1)));
    // z₂ itself is rational; z₄ and z₆ are conjugate.
    assert!(r.z2.coeffs().iter().all(|c| c.to_rational().is_some()));
    let conj: Vec<QuadExt> = r.z4.coeffs().iter().map(|c| c.conjugate()).collect();
    assert_eq!(conj, r.z6.coeffs());
}

#[test]
fn symmetric_identities_hold() {
    for (d, n) in [(rat(1), 40), (rat(2), 30)] {
        let s = symmetric_identities(&d, n).unwrap();
        assert!(s.sum.is_zero(), "d={d}");
        assert!(s.reciprocal_sum.is_zero(), "d={d}");
        assert!(s.quadratic_remainder.iter().all(|r| r.is_zero()), "d={d}");
    }
}

#[test]
fn quartic_is_palindromic_after_rescaling() {
    // With z = u/x², the u⁴ and u⁰ coefficients agree, as do u³ and u¹.
    let k = kernel_factors(&rat(3), 20);
    let c = k.fa3.coeffs();
    let shifted = |m: usize| c[m].shift_up(12 - 2 * m);
    assert_eq!(shifted(4).truncate(20), shifted(0).truncate(20));
    assert_eq!(shifted(3).truncate(20), shifted(1).truncate(20));
}

#[test]
fn column_convex_variants_agree_off_diagonal() {
    let y = ratio(1, 2);
    let lin = column_convex_f(Variant::Lin, &y, 24).unwrap();
    for v in [Variant::Sq2, Variant::SplitSq] {
        assert_eq!(column_convex_f(v, &y, 24).unwrap(), lin, "{v}");
    }
    let f = column_convex_f(Variant::SplitSq, &rat(1), 16).unwrap();
    let want = XSeries::from_terms(
        [1, 2, 7, 28, 122, 558, 2641]
            .iter()
            .enumerate()
            .map(|(i, &c)| (4 + 2 * i, rat(c))),
        16,
    );
    assert_eq!(f, want);
}

#[test]
fn directed_counts_are_ternary_trees() {
    let e = directed_e(15);
    for k in 1..=15u32 {
        assert_eq!(e.coeff(k as usize), BigInt::from(ternary_count(k)));
    }
    assert_eq!(ternary_count(4), BigUint::from(55u32));
    assert_eq!(ternary_count(1), BigUint::from(1u32));
}

#[test]
fn early_ratios_are_one() {
    let rows = ratio_table(20).unwrap();
    for row in rows.iter().filter(|r| r.n <= 12) {
        assert_eq!(row.ratio, "1.0000");
        assert_eq!(row.cc, row.dc);
    }
}
