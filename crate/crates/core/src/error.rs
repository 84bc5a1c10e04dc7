use thiserror::Error;

/// Errors surfaced by the arithmetic and number-theory layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus base {p} is not an odd prime below 2^31")]
    InvalidModulus { p: u64 },
    #[error("modulus exponent {e} is not 1 or 2")]
    InvalidExponent { e: u8 },
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("denominator {den} is divisible by p = {p}")]
    DenominatorDivisibleByP { den: i64, p: u32 },
    #[error("division by exact zero")]
    DivisionByExactZero,
    #[error("negative valuation {val}: value is not p-integral")]
    NegativeValuation { val: i64 },
    #[error("index {k} is too large for p = {p}")]
    IndexTooLarge { k: u64, p: u32 },
    #[error("{a} is not a quadratic residue modulo {q}")]
    NonResidue { a: u64, q: u32 },
    #[error("prime {p} is not congruent to {expected} modulo 4")]
    WrongResidueClass { p: u32, expected: u32 },
    #[error("unknown statement tag `{name}`")]
    UnknownStatement { name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
