//! Exact arbitrary-precision checks of the polynomial and finite-sum
//! identities underlying the congruence suite. Everything here is over the
//! rationals: identities are compared coefficient-wise, not by sampling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact integer binomial C(n,k) by the multiplicative formula.
pub fn big_binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Generalized binomial C(q,k) = q(q-1)...(q-k+1)/k! for rational q.
pub fn rational_binom(q: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        let term = q - BigRational::from_integer(BigInt::from(i));
        acc = acc * term / BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// A dense polynomial over the rationals, coefficients in ascending order
/// with no trailing zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = RatPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut p = RatPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn mul(&self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = RatPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> RatPolynomial {
        let mut p = RatPolynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() };
        p.trim();
        p
    }

    /// Multiplies by the linear factor (x + shift).
    fn mul_linear(&self, shift: &BigRational) -> RatPolynomial {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] += a;
            coeffs[i] += a * shift;
        }
        let mut p = RatPolynomial { coeffs };
        p.trim();
        p
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// The degree-k polynomial C(x,k) = x(x-1)...(x-k+1)/k!.
pub fn binom_poly(k: u64) -> RatPolynomial {
    let mut p = RatPolynomial::one();
    for i in 0..k {
        let shift = -BigRational::from_integer(BigInt::from(i));
        p = p.mul_linear(&shift).scale(&BigRational::new(BigInt::one(), BigInt::from(i + 1)));
    }
    p
}

/// The degree-k polynomial C(x+k,k) = (x+1)(x+2)...(x+k)/k!.
pub fn binom_shift_poly(k: u64) -> RatPolynomial {
    let mut p = RatPolynomial::one();
    for i in 1..=k {
        let shift = BigRational::from_integer(BigInt::from(i));
        p = p.mul_linear(&shift).scale(&BigRational::new(BigInt::one(), BigInt::from(i)));
    }
    p
}

/// The Delannoy polynomial d_n(x) = sum_k C(n,k) C(x,k) 2^k as an exact
/// rational polynomial of degree n.
pub fn d_poly(n: u64) -> RatPolynomial {
    let mut acc = RatPolynomial::zero();
    for k in 0..=n {
        let c = BigRational::from_integer(big_binom(n, k) * BigInt::from(2u32).pow(k as u32));
        acc = acc.add(&binom_poly(k).scale(&c));
    }
    acc
}

/// Checks d_n(x)^2 = sum_{k=0}^{n} C(n+k,2k) C(x,k) C(x+k,k) 4^k as an
/// identity of polynomials in x, coefficient by coefficient.
pub fn guo_identity_check(n: u64) -> bool {
    let d = d_poly(n);
    let lhs = d.mul(&d);
    let mut rhs = RatPolynomial::zero();
    for k in 0..=n {
        let c = BigRational::from_integer(big_binom(n + k, 2 * k) * BigInt::from(4u32).pow(k as u32));
        rhs = rhs.add(&binom_poly(k).mul(&binom_shift_poly(k)).scale(&c));
    }
    lhs == rhs
}

/// The Delannoy number D(m,n) by the lattice-path recurrence
/// D(m,n) = D(m-1,n) + D(m,n-1) + D(m-1,n-1).
pub fn delannoy_dp(m: u64, n: u64) -> BigInt {
    assert!(m <= 64 && n <= 64, "DP table is sized for arguments up to 64");
    let (m, n) = (m as usize, n as usize);
    let mut row = vec![BigInt::one(); n + 1];
    for _ in 1..=m {
        let mut prev_diag = row[0].clone();
        for j in 1..=n {
            let new = &row[j] + &row[j - 1] + &prev_diag;
            prev_diag = std::mem::replace(&mut row[j], new);
        }
    }
    row[n].clone()
}

/// Checks that both closed forms of the Delannoy number,
/// sum_k C(n,k) C(m,k) 2^k and sum_k C(n,k) C(n+m-k,n), agree with the
/// lattice-path DP.
pub fn delannoy_two_forms_check(m: u64, n: u64) -> bool {
    let mut form1 = BigInt::zero();
    let mut form2 = BigInt::zero();
    for k in 0..=n {
        form1 += big_binom(n, k) * big_binom(m, k) * BigInt::from(2u32).pow(k as u32);
        form2 += big_binom(n, k) * big_binom(n + m - k, n);
    }
    let dp = delannoy_dp(m, n);
    form1 == dp && form2 == dp
}

/// The four rational arguments of the congruence sums.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum XFamily {
    NegQuarter,
    NegSixth,
    PosQuarter,
    PosSixth,
}

impl XFamily {
    pub const ALL: [XFamily; 4] =
        [XFamily::NegQuarter, XFamily::NegSixth, XFamily::PosQuarter, XFamily::PosSixth];

    /// The argument as (numerator, denominator).
    pub fn x(&self) -> (i64, i64) {
        match self {
            XFamily::NegQuarter => (-1, 4),
            XFamily::NegSixth => (-1, 6),
            XFamily::PosQuarter => (1, 4),
            XFamily::PosSixth => (1, 6),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            XFamily::NegQuarter => "-1/4",
            XFamily::NegSixth => "-1/6",
            XFamily::PosQuarter => "1/4",
            XFamily::PosSixth => "1/6",
        }
    }
}

/// Exact check of the closed product form of C(x,j) C(x+j,j) for the four
/// arguments x in {-1/4, -1/6, 1/4, 1/6}:
///
/// * x = -1/4:  (-1)^j C(4j,2j) C(2j,j) / 64^j
/// * x = -1/6:  (-1)^j C(6j,3j) C(3j,j) / 432^j
/// * x =  1/4:  (-1)^(j-1) (4j+1) C(4j,2j) C(2j,j) / ((4j-1) 64^j)
/// * x =  1/6:  (-1)^(j-1) (6j+1) C(6j,3j) C(3j,j) / ((6j-1) 432^j)
pub fn product_identity_check(family: XFamily, j: u64) -> bool {
    let (num, den) = family.x();
    let q = BigRational::new(BigInt::from(num), BigInt::from(den));
    let qj = &q + BigRational::from_integer(BigInt::from(j));
    let lhs = rational_binom(&q, j) * rational_binom(&qj, j);

    let ji = j as i64;
    let (central, base, extra): (BigInt, u64, Option<(i64, i64)>) = match family {
        XFamily::NegQuarter => (big_binom(4 * j, 2 * j) * big_binom(2 * j, j), 64, None),
        XFamily::NegSixth => (big_binom(6 * j, 3 * j) * big_binom(3 * j, j), 432, None),
        XFamily::PosQuarter => (
            big_binom(4 * j, 2 * j) * big_binom(2 * j, j),
            64,
            Some((4 * ji + 1, 4 * ji - 1)),
        ),
        XFamily::PosSixth => (
            big_binom(6 * j, 3 * j) * big_binom(3 * j, j),
            432,
            Some((6 * ji + 1, 6 * ji - 1)),
        ),
    };
    let pow = BigInt::from(base).pow(j as u32);
    let rhs = match extra {
        None => {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            BigRational::new(central * BigInt::from(sign), pow)
        }
        Some((a, b)) => {
            let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
            BigRational::new(central * BigInt::from(sign * a), pow * BigInt::from(b))
        }
    };
    lhs == rhs
}

/// Exact check of the Chu-Vandermonde collapse
/// sum_{k=j}^{m} (-1)^k C(m,k) C(k+j,2j) = (-1)^m C(j, m-j),
/// where the right side is zero when m - j > j.
pub fn chu_vandermonde_check(m: u64, j: u64) -> bool {
    assert!(j <= m);
    let mut lhs = BigInt::zero();
    for k in j..=m {
        let term = big_binom(m, k) * big_binom(k + j, 2 * j);
        if k % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let mut rhs = big_binom(j, m - j);
    if m % 2 == 1 {
        rhs = -rhs;
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn binom_poly_small() {
        assert_eq!(binom_poly(0).coeffs(), &[rat(1, 1)]);
        assert_eq!(binom_poly(1).coeffs(), &[rat(0, 1), rat(1, 1)]);
        assert_eq!(binom_poly(2).coeffs(), &[rat(0, 1), rat(-1, 2), rat(1, 2)]);
    }

    #[test]
    fn d_poly_small() {
        assert_eq!(d_poly(1).coeffs(), &[rat(1, 1), rat(2, 1)]);
        assert_eq!(d_poly(2).coeffs(), &[rat(1, 1), rat(2, 1), rat(2, 1)]);
        assert_eq!(d_poly(2).eval(&rat(2, 1)), rat(13, 1));
    }

    #[test]
    fn guo_identity_small() {
        for n in 0..=6 {
            assert!(guo_identity_check(n), "n = {n}");
        }
    }

    #[test]
    fn delannoy_numbers() {
        assert_eq!(delannoy_dp(1, 1), BigInt::from(3));
        assert_eq!(delannoy_dp(2, 2), BigInt::from(13));
        assert_eq!(delannoy_dp(9, 0), BigInt::from(1));
        assert_eq!(delannoy_dp(8, 1), BigInt::from(17));
    }

    #[test]
    fn delannoy_forms_small() {
        assert!(delannoy_two_forms_check(1, 1));
        assert!(delannoy_two_forms_check(2, 2));
        assert!(delannoy_two_forms_check(5, 0));
        assert!(delannoy_two_forms_check(3, 7));
    }

    #[test]
    fn product_identities_by_hand() {
        // x = -1/4, j = 1: (-1/4)(3/4) = -3/16 = -C(4,2) C(2,1)/64
        assert_eq!(
            rational_binom(&rat(-1, 4), 1) * rational_binom(&rat(3, 4), 1),
            rat(-3, 16)
        );
        assert!(product_identity_check(XFamily::NegQuarter, 1));
        // x = 1/4, j = 1: (1/4)(5/4) = 5/16 = 5 * C(4,2) C(2,1) / (3 * 64)
        assert_eq!(
            rational_binom(&rat(1, 4), 1) * rational_binom(&rat(5, 4), 1),
            rat(5, 16)
        );
        assert!(product_identity_check(XFamily::PosQuarter, 1));
        for family in XFamily::ALL {
            assert!(product_identity_check(family, 0), "{family:?} at j = 0");
        }
    }

    #[test]
    fn chu_vandermonde_examples() {
        for j in 0..6 {
            assert!(chu_vandermonde_check(j, j));
        }
        assert!(chu_vandermonde_check(1, 0));
        // m = 3, j = 2: C(3,2)C(4,4) - C(3,3)C(5,4) = 3 - 5 = -2 = -C(2,1)
        let mut s = BigInt::zero();
        s += big_binom(3, 2) * big_binom(4, 4);
        s -= big_binom(3, 3) * big_binom(5, 4);
        assert_eq!(s, BigInt::from(-2));
        assert!(chu_vandermonde_check(3, 2));
    }

    #[test]
    fn generalized_binom_at_integers() {
        for n in 0..8u64 {
            for k in 0..8u64 {
                let q = BigRational::from_integer(BigInt::from(n));
                assert_eq!(rational_binom(&q, k), BigRational::from_integer(big_binom(n, k)));
            }
        }
    }
}
