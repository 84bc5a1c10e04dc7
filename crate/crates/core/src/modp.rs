//! Residue arithmetic modulo p^e for an odd prime p < 2^31 and e in {1, 2}.
//!
//! With p < 2^31 every modulus fits in 62 bits, so a product of two reduced
//! residues fits in 124 bits; all multiplications go through u128 and are
//! exact. [`ValuatedResidue`] carries a p-adic valuation separately from a
//! unit, which keeps expressions that transiently divide by p exact until
//! they are collapsed back to a plain residue.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ntheory;

/// The modulus p^e. Construction checks that p is an odd prime below 2^31
/// and that e is 1 or 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Modulus {
    p: u32,
    e: u8,
    m: u64,
}

impl Modulus {
    pub fn new(p: u32, e: u8) -> Result<Self> {
        if e != 1 && e != 2 {
            return Err(Error::InvalidExponent { e });
        }
        if p < 3 || p >= 1 << 31 || !ntheory::is_prime(p) {
            return Err(Error::InvalidModulus { p: p as u64 });
        }
        Ok(Modulus { p, e, m: (p as u64).pow(e as u32) })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u8 {
        self.e
    }

    /// The modulus value p^e.
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn residue(&self, value: u64) -> Residue {
        Residue { modulus: *self, value: value % self.m }
    }

    pub fn residue_i64(&self, value: i64) -> Residue {
        let m = self.m as i128;
        Residue { modulus: *self, value: (value as i128).rem_euclid(m) as u64 }
    }

    pub fn zero(&self) -> Residue {
        self.residue(0)
    }

    pub fn one(&self) -> Residue {
        self.residue(1)
    }

    /// Embeds the rational num/den, which must have denominator coprime to
    /// p, as num * den^-1 modulo p^e.
    pub fn embed(&self, num: i64, den: i64) -> Result<Residue> {
        if den.rem_euclid(self.p as i64) == 0 {
            return Err(Error::DenominatorDivisibleByP { den, p: self.p });
        }
        let d = self.residue_i64(den).inv().expect("denominator coprime to p");
        Ok(self.residue_i64(num) * d)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m)
    }
}

/// An integer in `[0, p^e)`. Arithmetic between residues of different
/// moduli is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Residue {
    modulus: Modulus,
    value: u64,
}

fn egcd_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

impl Residue {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse modulo p^e by the extended Euclidean
    /// algorithm; fails when p divides the value.
    pub fn inv(&self) -> Result<Residue> {
        egcd_inverse(self.value, self.modulus.m)
            .map(|v| Residue { modulus: self.modulus, value: v })
            .ok_or(Error::NotInvertible { value: self.value, modulus: self.modulus.m })
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, mut n: u64) -> Residue {
        let m = self.modulus.m;
        let mut base = self.value;
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = ((acc as u128 * base as u128) % m as u128) as u64;
            }
            base = ((base as u128 * base as u128) % m as u128) as u64;
            n >>= 1;
        }
        Residue { modulus: self.modulus, value: acc }
    }

    /// Reduction to the prime modulus p (e = 1).
    pub fn reduce_mod_p(&self) -> Residue {
        let m1 = Modulus::new(self.modulus.p, 1).expect("valid modulus");
        m1.residue(self.value % m1.m)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.m)
    }
}

fn check_same_modulus(a: &Modulus, b: &Modulus) {
    assert_eq!(a, b, "arithmetic on residues with mismatched moduli");
}

impl Add for Residue {
    type Output = Residue;

    fn add(self, rhs: Residue) -> Residue {
        check_same_modulus(&self.modulus, &rhs.modulus);
        let mut v = self.value + rhs.value;
        if v >= self.modulus.m {
            v -= self.modulus.m;
        }
        Residue { modulus: self.modulus, value: v }
    }
}

impl Sub for Residue {
    type Output = Residue;

    fn sub(self, rhs: Residue) -> Residue {
        check_same_modulus(&self.modulus, &rhs.modulus);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus.m - rhs.value
        };
        Residue { modulus: self.modulus, value: v }
    }
}

impl Mul for Residue {
    type Output = Residue;

    fn mul(self, rhs: Residue) -> Residue {
        check_same_modulus(&self.modulus, &rhs.modulus);
        let v = ((self.value as u128 * rhs.value as u128) % self.modulus.m as u128) as u64;
        Residue { modulus: self.modulus, value: v }
    }
}

impl Neg for Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        let v = if self.value == 0 { 0 } else { self.modulus.m - self.value };
        Residue { modulus: self.modulus, value: v }
    }
}

/// A p-adic valuation: finite (possibly negative after division) or
/// infinite for the exact zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

/// A value p^val * unit with the unit kept coprime to p modulo p^e.
///
/// Exact zero is represented as infinite valuation, so products of zeros
/// stay exact; a negative valuation is representable (division may produce
/// one) and only [`ValuatedResidue::collapse`] rejects it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ValuatedResidue {
    modulus: Modulus,
    val: Valuation,
    unit: u64,
}

impl ValuatedResidue {
    /// The exact zero, p^infinity.
    pub fn exact_zero(modulus: Modulus) -> Self {
        ValuatedResidue { modulus, val: Valuation::Infinite, unit: 1 }
    }

    pub fn one(modulus: Modulus) -> Self {
        ValuatedResidue { modulus, val: Valuation::Finite(0), unit: 1 }
    }

    /// Builds p^val * unit from an already reduced unit, which must be
    /// coprime to p.
    pub fn new(modulus: Modulus, val: i64, unit: u64) -> Self {
        let unit = unit % modulus.m;
        assert!(unit % modulus.p as u64 != 0, "unit {} divisible by p = {}", unit, modulus.p);
        ValuatedResidue { modulus, val: Valuation::Finite(val), unit }
    }

    /// Exact decomposition of an integer: strips every factor of p before
    /// reducing, so the valuation is exact regardless of e.
    pub fn from_integer(modulus: Modulus, n: u64) -> Self {
        if n == 0 {
            return Self::exact_zero(modulus);
        }
        let p = modulus.p as u64;
        let mut n = n;
        let mut val = 0i64;
        while n % p == 0 {
            n /= p;
            val += 1;
        }
        ValuatedResidue { modulus, val: Valuation::Finite(val), unit: n % modulus.m }
    }

    pub fn from_integer_i64(modulus: Modulus, n: i64) -> Self {
        if n < 0 {
            let v = Self::from_integer(modulus, n.unsigned_abs());
            return ValuatedResidue { unit: (modulus.m - v.unit) % modulus.m, ..v };
        }
        Self::from_integer(modulus, n as u64)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn val(&self) -> Valuation {
        self.val
    }

    /// The unit part modulo p^e; meaningless for the exact zero.
    pub fn unit(&self) -> u64 {
        self.unit
    }

    pub fn is_exact_zero(&self) -> bool {
        self.val == Valuation::Infinite
    }

    pub fn mul(&self, rhs: &ValuatedResidue) -> ValuatedResidue {
        check_same_modulus(&self.modulus, &rhs.modulus);
        let (Valuation::Finite(a), Valuation::Finite(b)) = (self.val, rhs.val) else {
            return Self::exact_zero(self.modulus);
        };
        let unit = ((self.unit as u128 * rhs.unit as u128) % self.modulus.m as u128) as u64;
        ValuatedResidue { modulus: self.modulus, val: Valuation::Finite(a + b), unit }
    }

    /// Division; valuations subtract and may go negative. Division by the
    /// exact zero is an error.
    pub fn div(&self, rhs: &ValuatedResidue) -> Result<ValuatedResidue> {
        check_same_modulus(&self.modulus, &rhs.modulus);
        let Valuation::Finite(b) = rhs.val else {
            return Err(Error::DivisionByExactZero);
        };
        let Valuation::Finite(a) = self.val else {
            return Ok(Self::exact_zero(self.modulus));
        };
        let inv = egcd_inverse(rhs.unit, self.modulus.m).expect("unit coprime to p");
        let unit = ((self.unit as u128 * inv as u128) % self.modulus.m as u128) as u64;
        Ok(ValuatedResidue { modulus: self.modulus, val: Valuation::Finite(a - b), unit })
    }

    pub fn pow(&self, n: u32) -> ValuatedResidue {
        match self.val {
            Valuation::Infinite => {
                if n == 0 {
                    Self::one(self.modulus)
                } else {
                    *self
                }
            }
            Valuation::Finite(v) => {
                let unit = self.modulus.residue(self.unit).pow(n as u64).value();
                ValuatedResidue {
                    modulus: self.modulus,
                    val: Valuation::Finite(v * n as i64),
                    unit,
                }
            }
        }
    }

    /// Collapses p^val * unit to a plain residue modulo p^e. Zero when
    /// val >= e or the value is exact zero; a negative valuation means the
    /// value is not a p-adic integer and is reported, never masked.
    pub fn collapse(&self) -> Result<Residue> {
        match self.val {
            Valuation::Infinite => Ok(self.modulus.zero()),
            Valuation::Finite(v) if v < 0 => Err(Error::NegativeValuation { val: v }),
            Valuation::Finite(v) if v >= self.modulus.e as i64 => Ok(self.modulus.zero()),
            Valuation::Finite(v) => {
                let pv = (self.modulus.p as u64).pow(v as u32);
                Ok(self.modulus.residue(pv) * self.modulus.residue(self.unit))
            }
        }
    }
}
