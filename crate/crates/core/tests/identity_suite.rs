//! The exact rational identity suite at development scale. The acceptance
//! suite runs the full ranges; these stay quick enough for every build.

use delannoy::identities::{
    big_binom, binom_poly, chu_vandermonde_check, d_poly, delannoy_dp, delannoy_two_forms_check,
    guo_identity_check, product_identity_check, rational_binom, XFamily,
};
use delannoy::ntheory::sieve_primes;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[test]
fn guo_identity_holds() {
    for n in 0..=12 {
        assert!(guo_identity_check(n), "n = {n}");
    }
}

#[test]
fn product_identities_hold() {
    for family in XFamily::ALL {
        for j in 0..=25 {
            assert!(product_identity_check(family, j), "{family:?}, j = {j}");
        }
    }
}

#[test]
fn chu_vandermonde_holds() {
    for m in 0..=40 {
        for j in 0..=m {
            assert!(chu_vandermonde_check(m, j), "m = {m}, j = {j}");
        }
    }
}

#[test]
fn delannoy_grid_and_polynomial_agree() {
    for m in 0..=12u64 {
        for n in 0..=12u64 {
            assert!(delannoy_two_forms_check(m, n), "({m},{n})");
            let at_m = d_poly(n).eval(&BigRational::from_integer(m.into()));
            assert_eq!(at_m, delannoy_dp(m, n).into(), "d_{n}({m})");
            let at_n = d_poly(m).eval(&BigRational::from_integer(n.into()));
            assert_eq!(at_m, at_n, "symmetry d_{n}({m}) = d_{m}({n})");
        }
    }
}

#[test]
fn low_binomial_vanishes_below_quarter_range() {
    // C(j, (p-1)/2 - j) = 0 exactly for 0 <= j < (p-1)/4
    for p in sieve_primes(3, 200) {
        let h = (p as u64 - 1) / 2;
        for j in 0..h.div_ceil(2) {
            if 4 * j < p as u64 - 1 {
                let q = BigRational::from_integer(BigInt::from(j));
                assert!(rational_binom(&q, h - j).is_zero(), "p = {p}, j = {j}");
            }
        }
    }
    // the polynomial route agrees with the product route at small degree
    for j in 0..6u64 {
        let q = BigRational::from_integer(BigInt::from(j));
        for k in 0..=12u64 {
            assert_eq!(binom_poly(k).eval(&q), rational_binom(&q, k));
        }
    }
}

#[test]
fn big_binom_pascal_row() {
    let row: Vec<BigInt> = (0..=6).map(|k| big_binom(6, k)).collect();
    let expected: Vec<BigInt> = [1, 6, 15, 20, 15, 6, 1].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(row, expected);
    assert!(big_binom(4, 9).is_zero());
}
