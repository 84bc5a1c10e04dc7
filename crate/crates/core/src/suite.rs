//! The congruence suite: every congruence statement about the sums
//! S(x) = sum_{k=0}^{p-1} C(2k,k)/4^k d_k(x)^2 and the reductions they
//! factor through, each implemented as a checkable unit that returns a
//! structured [`VerificationRecord`].
//!
//! Domain rules are total: a prime outside a statement's domain produces an
//! out-of-domain record rather than a silent skip, so campaign accounting
//! always adds up.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::identities::XFamily;
use crate::modp::{Modulus, Residue, Valuation, ValuatedResidue};
use crate::ntheory;
use crate::sequences::{
    binom_valuated, central_ratio_sequence, d_sequence, gen_binom_pair_sequences,
    gen_binom_residue, unit_inverses,
};

/// Tags for the checkable statements. `MAIN3_LITERAL` is the displayed
/// right side of the third main congruence; `MAIN3_ADJUSTED` is the same
/// statement with the sign of the p = 3 (mod 4) case flipped. Both are
/// tracked because direct evaluation contradicts the displayed sign; the
/// suite reports, it does not arbitrate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum StatementId {
    Main1,
    Main2,
    Main3Literal,
    Main3Adjusted,
    Main4,
    DsquareX,
    CentralReduction,
    VanishingRange,
    QuarterEval,
    BcdeModp2,
    FinalReduction,
    ConjZeroModp2,
    SunAlternating,
}

impl StatementId {
    pub const ALL: [StatementId; 13] = [
        StatementId::Main1,
        StatementId::Main2,
        StatementId::Main3Literal,
        StatementId::Main3Adjusted,
        StatementId::Main4,
        StatementId::DsquareX,
        StatementId::CentralReduction,
        StatementId::VanishingRange,
        StatementId::QuarterEval,
        StatementId::BcdeModp2,
        StatementId::FinalReduction,
        StatementId::ConjZeroModp2,
        StatementId::SunAlternating,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            StatementId::Main1 => "MAIN1",
            StatementId::Main2 => "MAIN2",
            StatementId::Main3Literal => "MAIN3_LITERAL",
            StatementId::Main3Adjusted => "MAIN3_ADJUSTED",
            StatementId::Main4 => "MAIN4",
            StatementId::DsquareX => "DSQUARE_X",
            StatementId::CentralReduction => "CENTRAL_REDUCTION",
            StatementId::VanishingRange => "VANISHING_RANGE",
            StatementId::QuarterEval => "QUARTER_EVAL",
            StatementId::BcdeModp2 => "BCDE_MODP2",
            StatementId::FinalReduction => "FINAL_REDUCTION",
            StatementId::ConjZeroModp2 => "CONJ_ZERO_MODP2",
            StatementId::SunAlternating => "SUN_ALTERNATING",
        }
    }

    /// Whether the statement takes a rational argument x.
    pub fn takes_x(&self) -> bool {
        matches!(self, StatementId::DsquareX | StatementId::SunAlternating)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatementId::ALL
            .iter()
            .find(|t| t.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownStatement { name: s.to_string() })
    }
}

/// How a record came out: a verified equality, a counterexample, or a prime
/// outside the statement's domain.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    Pass,
    Fail,
    OutOfDomain,
}

/// One (statement, prime) verification outcome. `ok` holds exactly when
/// `lhs == rhs`; out-of-domain records carry lhs = rhs = 0 and a note
/// explaining the exclusion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationRecord {
    pub statement: StatementId,
    pub p: u32,
    pub e: u8,
    pub lhs: u64,
    pub rhs: u64,
    pub ok: bool,
    pub note: String,
    outcome: Outcome,
}

impl VerificationRecord {
    fn checked(
        statement: StatementId,
        p: u32,
        e: u8,
        lhs: Residue,
        rhs: Residue,
        note: impl Into<String>,
    ) -> Self {
        let ok = lhs.value() == rhs.value();
        VerificationRecord {
            statement,
            p,
            e,
            lhs: lhs.value(),
            rhs: rhs.value(),
            ok,
            note: note.into(),
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        }
    }

    fn out_of_domain(statement: StatementId, p: u32, e: u8, reason: impl fmt::Display) -> Self {
        VerificationRecord {
            statement,
            p,
            e,
            lhs: 0,
            rhs: 0,
            ok: true,
            note: format!("out of domain: {reason}"),
            outcome: Outcome::OutOfDomain,
        }
    }

    pub fn outcome(&self) -> Outcome {
        self.outcome
    }
}

fn modulus(p: u32, e: u8) -> Modulus {
    Modulus::new(p, e).expect("p checked prime and odd by the caller")
}

fn require_prime(p: u32) {
    assert!(ntheory::is_prime(p), "p = {p} is not prime");
}

/// (-1)^exp as a residue.
fn sign_pow(m: Modulus, exp: u32) -> Residue {
    if exp % 2 == 0 {
        m.one()
    } else {
        -m.one()
    }
}

/// The least non-negative residue of the p-adic integer x modulo p.
pub fn residue_index(x: Rational64, p: u32) -> Result<u32> {
    let m = Modulus::new(p, 1)?;
    Ok(m.embed(*x.numer(), *x.denom())?.value() as u32)
}

/// S(x) = sum_{k=0}^{p-1} C(2k,k)/4^k d_k(x)^2 modulo p^e, in O(p) via the
/// d-sequence recurrence and the central ratio recurrence.
pub fn lhs_sum(x: Rational64, m: Modulus) -> Result<Residue> {
    let xr = m.embed(*x.numer(), *x.denom())?;
    let n = m.p() - 1;
    let d = d_sequence(xr, n)?;
    let c = central_ratio_sequence(n, m)?;
    let mut sum = m.zero();
    for k in 0..=n as usize {
        let dk = d.get(k);
        sum = sum + c.get(k) * dk * dk;
    }
    Ok(sum)
}

/// Right side of the first main congruence: 2 (-1)^((p-1)/4) x modulo p
/// with p = x^2 + y^2, x = 1 (mod 4), when p = 1 (mod 4); zero otherwise.
pub fn rhs_main1(p: u32) -> Residue {
    require_prime(p);
    let m = modulus(p, 1);
    if p % 4 == 1 {
        let ts = ntheory::two_squares(p).expect("p = 1 (mod 4)");
        sign_pow(m, (p - 1) / 4) * m.residue_i64(2 * ts.x)
    } else {
        m.zero()
    }
}

/// Right side of the third main congruence as displayed:
/// (-1)^((p+1)/4) C((p-1)/2, (p-3)/4) for p = 3 (mod 4), zero otherwise.
pub fn rhs_main3(p: u32) -> Residue {
    require_prime(p);
    let m = modulus(p, 1);
    if p % 4 == 3 {
        let c = binom_valuated((p as u64 - 1) / 2, (p as i64 - 3) / 4, m)
            .collapse()
            .expect("plain binomial");
        sign_pow(m, (p + 1) / 4) * c
    } else {
        m.zero()
    }
}

/// The sign-adjusted variant of [`rhs_main3`]: the p = 3 (mod 4) case is
/// negated, matching what direct evaluation of the sum yields.
pub fn rhs_main3_adjusted(p: u32) -> Residue {
    require_prime(p);
    if p % 4 == 3 {
        -rhs_main3(p)
    } else {
        rhs_main3(p)
    }
}

/// The four main congruences for S(-1/4), S(-1/6), S(1/4), S(1/6) modulo p.
/// `which` selects the statement 1..=4; statement 3 yields two records,
/// the literal and the sign-adjusted variant, sharing one evaluation of the
/// sum.
pub fn verify_main(which: u32, p: u32) -> Vec<VerificationRecord> {
    assert!((1..=4).contains(&which), "main statement index must be 1..=4");
    require_prime(p);
    let stmts: &[StatementId] = match which {
        1 => &[StatementId::Main1],
        2 => &[StatementId::Main2],
        3 => &[StatementId::Main3Literal, StatementId::Main3Adjusted],
        _ => &[StatementId::Main4],
    };
    if p == 2 {
        return stmts
            .iter()
            .map(|&s| VerificationRecord::out_of_domain(s, p, 1, "every statement requires an odd prime"))
            .collect();
    }
    let m = modulus(p, 1);
    match which {
        1 => {
            let lhs = lhs_sum(Rational64::new(-1, 4), m).expect("4 is coprime to odd p");
            vec![VerificationRecord::checked(StatementId::Main1, p, 1, lhs, rhs_main1(p), "")]
        }
        2 => {
            if p == 3 {
                return vec![VerificationRecord::out_of_domain(
                    StatementId::Main2,
                    p,
                    1,
                    "statement applies only for p > 3",
                )];
            }
            let lhs = lhs_sum(Rational64::new(-1, 6), m).expect("6 is coprime to p > 3");
            vec![VerificationRecord::checked(StatementId::Main2, p, 1, lhs, m.zero(), "")]
        }
        3 => {
            let lhs = lhs_sum(Rational64::new(1, 4), m).expect("4 is coprime to odd p");
            vec![
                VerificationRecord::checked(StatementId::Main3Literal, p, 1, lhs, rhs_main3(p), ""),
                VerificationRecord::checked(
                    StatementId::Main3Adjusted,
                    p,
                    1,
                    lhs,
                    rhs_main3_adjusted(p),
                    "",
                ),
            ]
        }
        _ => {
            if p == 3 {
                return vec![VerificationRecord::out_of_domain(
                    StatementId::Main4,
                    p,
                    1,
                    "statement applies only for p > 5",
                )];
            }
            if p == 5 {
                let sum = lhs_sum(Rational64::new(1, 6), m).expect("6 is coprime to 5");
                return vec![VerificationRecord::out_of_domain(
                    StatementId::Main4,
                    p,
                    1,
                    format!("no claim at p = 5; sum = {} (mod 5)", sum.value()),
                )];
            }
            let lhs = lhs_sum(Rational64::new(1, 6), m).expect("6 is coprime to p > 5");
            vec![VerificationRecord::checked(StatementId::Main4, p, 1, lhs, m.zero(), "")]
        }
    }
}

/// The key reduction: S(x) = (-1)^((p-1)/2) *
/// sum_{j=0}^{(p-1)/2} C(x,j) C(x+j,j) C(j,(p-1)/2-j) 4^j (mod p) for any
/// p-adic integer x. Left side via the O(p) kernels, right side via
/// incremental binomial rows; the record compares the two routes.
pub fn verify_dsquare_x(x: Rational64, p: u32) -> VerificationRecord {
    require_prime(p);
    let stmt = StatementId::DsquareX;
    if p == 2 {
        return VerificationRecord::out_of_domain(stmt, p, 1, "every statement requires an odd prime");
    }
    let m = modulus(p, 1);
    if x.denom().rem_euclid(p as i64) == 0 {
        return VerificationRecord::out_of_domain(
            stmt,
            p,
            1,
            format!("x = {x} has denominator divisible by p"),
        );
    }
    let lhs = lhs_sum(x, m).expect("denominator checked");
    let xr = m.embed(*x.numer(), *x.denom()).expect("denominator checked");
    let h = (p - 1) / 2;
    let (a, b) = gen_binom_pair_sequences(xr, h).expect("h < p");
    let inv = unit_inverses(m, h).expect("h < p");
    // C(j, h-j) vanishes below j0 = ceil(h/2); from there each step is
    // C(j+1,h-j-1) = C(j,h-j) (j+1)(h-j) / ((2j-h+1)(2j-h+2)).
    let j0 = h.div_ceil(2);
    let mut bin = gen_binom_residue(m.residue(j0 as u64), h - j0).expect("h - j0 < p");
    let mut pw4 = m.residue(4).pow(j0 as u64);
    let four = m.residue(4);
    let mut rhs = m.zero();
    for j in j0..=h {
        let i = j as usize;
        rhs = rhs + a.get(i) * b.get(i) * bin * pw4;
        if j < h {
            bin = bin
                * m.residue(j as u64 + 1)
                * m.residue((h - j) as u64)
                * m.residue(inv[(2 * j - h + 1) as usize])
                * m.residue(inv[(2 * j - h + 2) as usize]);
            pw4 = pw4 * four;
        }
    }
    rhs = sign_pow(m, h) * rhs;
    VerificationRecord::checked(stmt, p, 1, lhs, rhs, format!("x = {x}"))
}

/// The two-case reduction of the central ratios: C(2k,k)/4^k =
/// (-1)^k C((p-1)/2, k) (mod p) for k <= (p-1)/2 and = 0 (mod p) above.
pub fn verify_central_reduction(p: u32) -> VerificationRecord {
    require_prime(p);
    let stmt = StatementId::CentralReduction;
    if p == 2 {
        return VerificationRecord::out_of_domain(stmt, p, 1, "every statement requires an odd prime");
    }
    let m = modulus(p, 1);
    let c = central_ratio_sequence(p - 1, m).expect("p - 1 < p");
    let h = (p - 1) / 2;
    let inv = unit_inverses(m, h).expect("h < p");
    let mut bin = m.one();
    for k in 0..p {
        let expected = if k <= h {
            sign_pow(m, k) * bin
        } else {
            m.zero()
        };
        let got = c.get(k as usize);
        if got != expected {
            return VerificationRecord::checked(
                stmt,
                p,
                1,
                got,
                expected,
                format!("first mismatch at k = {k}"),
            );
        }
        if k < h {
            bin = bin * m.residue((h - k) as u64) * m.residue(inv[k as usize + 1]);
        }
    }
    VerificationRecord::checked(stmt, p, 1, m.zero(), m.zero(), "")
}

fn vanishing_lower_bound(family: XFamily, p: u32) -> u32 {
    match family {
        XFamily::NegQuarter => p.div_ceil(4),
        XFamily::NegSixth => p.div_ceil(6),
        XFamily::PosQuarter => (p + 3).div_ceil(4),
        XFamily::PosSixth => (p + 3).div_ceil(6),
    }
}

/// The mod-p vanishing of C(x,j) C(x+j,j) over the stated j ranges, by
/// direct evaluation of the binomial rows. For x = 1/4 and p = 3 (mod 4)
/// the excluded index j = (p+1)/4 (where 4j - 1 = p) is additionally
/// checked to be a p-adic unit via the closed product form in valuated
/// arithmetic at e = 2.
pub fn verify_vanishing_ranges(p: u32, family: XFamily) -> VerificationRecord {
    require_prime(p);
    let stmt = StatementId::VanishingRange;
    if p == 2 {
        return VerificationRecord::out_of_domain(stmt, p, 1, "every statement requires an odd prime");
    }
    let label = family.label();
    if matches!(family, XFamily::NegSixth | XFamily::PosSixth) && p == 3 {
        return VerificationRecord::out_of_domain(
            stmt,
            p,
            1,
            format!("x = {label} requires p > 3"),
        );
    }
    let m = modulus(p, 1);
    let (num, den) = family.x();
    let xr = m.embed(num, den).expect("denominator coprime by the family guard");
    let h = (p - 1) / 2;
    let (a, b) = gen_binom_pair_sequences(xr, h).expect("h < p");
    let product = |j: u32| (a.get(j as usize) * b.get(j as usize)).value();

    let mut first_nonzero: Option<(u32, u64)> = None;
    let mut observe = |j: u32| {
        let v = product(j);
        if v != 0 && first_nonzero.is_none() {
            first_nonzero = Some((j, v));
        }
    };
    if family == XFamily::PosQuarter && p % 4 == 1 {
        observe((p - 1) / 4);
    }
    for j in vanishing_lower_bound(family, p)..=h {
        observe(j);
    }
    if let Some((j, v)) = first_nonzero {
        return VerificationRecord::checked(
            stmt,
            p,
            1,
            m.residue(v),
            m.zero(),
            format!("x = {label}; first nonzero product at j = {j}"),
        );
    }

    let mut note = format!("x = {label}");
    if family == XFamily::PosQuarter && p % 4 == 3 {
        // 4j - 1 = p at j = (p+1)/4: the closed form divides by p once and
        // the binomial product supplies exactly one factor p back.
        let j = (p as u64 + 1) / 4;
        let m2 = modulus(p, 2);
        let numerator = ValuatedResidue::from_integer(m2, 4 * j + 1)
            .mul(&binom_valuated(4 * j, 2 * j as i64, m2))
            .mul(&binom_valuated(2 * j, j as i64, m2))
            .mul(&ValuatedResidue::from_integer_i64(m2, if (j + 1) % 2 == 0 { 1 } else { -1 }));
        let denominator = ValuatedResidue::from_integer(m2, 4 * j - 1)
            .mul(&ValuatedResidue::new(m2, 0, m2.residue(64).pow(j).value()));
        let closed = numerator.div(&denominator).expect("denominator nonzero");
        let direct = m.residue(product(j as u32));
        if closed.val() != Valuation::Finite(0) {
            let v = match closed.val() {
                Valuation::Finite(v) => v.to_string(),
                Valuation::Infinite => "infinite".to_string(),
            };
            return VerificationRecord::checked(
                stmt,
                p,
                1,
                m.one(),
                m.zero(),
                format!("x = {label}; expected p-adic unit at j = {j}, found valuation {v}"),
            );
        }
        let collapsed = closed.collapse().expect("valuation zero").reduce_mod_p();
        if collapsed != direct {
            return VerificationRecord::checked(
                stmt,
                p,
                1,
                direct,
                collapsed,
                format!("x = {label}; closed form disagrees with direct evaluation at j = {j}"),
            );
        }
        note = format!(
            "x = {label}; j = {j} excluded: product is a p-adic unit, {} (mod p)",
            direct.value()
        );
    }
    VerificationRecord::checked(stmt, p, 1, m.zero(), m.zero(), note)
}

/// A synthetic unequal pair for the branch where a right side fails to
/// collapse to a residue at all; the note explains, the rhs field is not a
/// value of the statement.
fn synthetic_mismatch(
    stmt: StatementId,
    p: u32,
    e: u8,
    m: Modulus,
    lhs: Residue,
    note: String,
) -> VerificationRecord {
    let rhs = m.residue((lhs.value() + 1) % m.m());
    VerificationRecord::checked(stmt, p, e, lhs, rhs, note)
}

/// The evaluations of the key reduction at x = -1/4 and x = 1/4 against
/// their displayed closed forms. Every binomial is computed with its exact
/// p-adic valuation and the p-divisible factors (4p and the binomial of the
/// p = 3 (mod 4) case) cancel in valuated arithmetic at e = 2 before the
/// comparison modulo p.
pub fn verify_quarter_evaluations(p: u32) -> [VerificationRecord; 2] {
    require_prime(p);
    let stmt = StatementId::QuarterEval;
    if p == 2 {
        let ood = || VerificationRecord::out_of_domain(stmt, p, 1, "every statement requires an odd prime");
        return [ood(), ood()];
    }
    let m = modulus(p, 1);
    let m2 = modulus(p, 2);
    let pu = p as u64;
    let eval = |family: XFamily| -> VerificationRecord {
        let (num, den) = family.x();
        let label = family.label();
        let lhs = lhs_sum(Rational64::new(num, den), m).expect("4 coprime to odd p");
        let closed: Option<(u32, ValuatedResidue, ValuatedResidue)> = match (family, p % 4) {
            // (-1)^((p-1)/4) C(p-1,(p-1)/2) C((p-1)/2,(p-1)/4) / 16^((p-1)/4)
            (XFamily::NegQuarter, 1) => {
                let q = (pu - 1) / 4;
                let numerator = binom_valuated(pu - 1, ((pu - 1) / 2) as i64, m2)
                    .mul(&binom_valuated((pu - 1) / 2, q as i64, m2));
                let denominator = ValuatedResidue::new(m2, 0, m2.residue(16).pow(q).value());
                Some(((p - 1) / 4, numerator, denominator))
            }
            (XFamily::NegQuarter, _) => None,
            (XFamily::PosQuarter, 1) => None,
            // (-1)^((p+1)/4) (4p+2) C(p+1,(p+1)/2) C((p+1)/2,(p+1)/4) / (4p 16^((p+1)/4))
            (XFamily::PosQuarter, _) => {
                let q = (pu + 1) / 4;
                let numerator = ValuatedResidue::from_integer(m2, 4 * pu + 2)
                    .mul(&binom_valuated(pu + 1, ((pu + 1) / 2) as i64, m2))
                    .mul(&binom_valuated((pu + 1) / 2, q as i64, m2));
                let denominator = ValuatedResidue::from_integer(m2, 4 * pu)
                    .mul(&ValuatedResidue::new(m2, 0, m2.residue(16).pow(q).value()));
                Some(((p + 1) / 4, numerator, denominator))
            }
            (XFamily::NegSixth | XFamily::PosSixth, _) => unreachable!("quarter families only"),
        };
        match closed {
            None => VerificationRecord::checked(stmt, p, 1, lhs, m.zero(), format!("x = {label}")),
            Some((sign_exp, numerator, denominator)) => {
                let ratio = numerator.div(&denominator).expect("denominator is a unit times p");
                match ratio.collapse() {
                    Err(Error::NegativeValuation { val }) => synthetic_mismatch(
                        stmt,
                        p,
                        1,
                        m,
                        lhs,
                        format!("x = {label}; right side not p-integral (valuation {val}); rhs field synthetic"),
                    ),
                    Err(_) => unreachable!("collapse only fails with NegativeValuation"),
                    Ok(r) => {
                        let rhs = sign_pow(m, sign_exp) * r.reduce_mod_p();
                        VerificationRecord::checked(stmt, p, 1, lhs, rhs, format!("x = {label}"))
                    }
                }
            }
        }
    };
    [eval(XFamily::NegQuarter), eval(XFamily::PosQuarter)]
}

/// The Beukers-Chowla-Dwork-Evans congruence for p = 1 (mod 4):
/// C((p-1)/2,(p-1)/4) = (2^(p-1)+1)/2 (2x - p/(2x)) (mod p^2) with
/// p = x^2 + y^2, x = 1 (mod 4); the mod-p corollary
/// C((p-1)/2,(p-1)/4) = 2x (mod p) is asserted alongside.
pub fn verify_bcde(p: u32) -> VerificationRecord {
    require_prime(p);
    let stmt = StatementId::BcdeModp2;
    if p == 2 {
        return VerificationRecord::out_of_domain(stmt, p, 2, "every statement requires an odd prime");
    }
    if p % 4 != 1 {
        return VerificationRecord::out_of_domain(stmt, p, 2, "requires p = 1 (mod 4)");
    }
    let m2 = modulus(p, 2);
    let ts = ntheory::two_squares(p).expect("p = 1 (mod 4)");
    let pu = p as u64;
    let lhs = binom_valuated((pu - 1) / 2, ((pu - 1) / 4) as i64, m2)
        .collapse()
        .expect("binomial of units");
    let half = (m2.residue(2).pow(pu - 1) + m2.one())
        * m2.residue(2).inv().expect("p odd");
    let two_x = m2.residue_i64(2 * ts.x);
    let rhs = half * (two_x - m2.residue(pu) * two_x.inv().expect("x coprime to p"));

    let m1 = modulus(p, 1);
    let cor_lhs = lhs.reduce_mod_p();
    let cor_rhs = m1.residue_i64(2 * ts.x);
    let note = format!("x = {}, y = {}; mod p corollary {} = {}", ts.x, ts.y, cor_lhs.value(), cor_rhs.value());
    if lhs == rhs && cor_lhs != cor_rhs {
        // unreachable mathematically; report the corollary pair if it ever fires
        return VerificationRecord::checked(stmt, p, 2, cor_lhs, cor_rhs, note);
    }
    VerificationRecord::checked(stmt, p, 2, lhs, rhs, note)
}

/// The final display of the p = 3 (mod 4) chain:
/// (4p+2) C(p+1,(p+1)/2) C((p+1)/2,(p+1)/4) / (4p 16^((p+1)/4)) against
/// C((p-1)/2,(p-3)/4) modulo p. The left side is assembled in valuated
/// arithmetic at e = 2 (the binomial carries valuation 1, cancelling the
/// explicit p); the record compares against the displayed right side and
/// its negation and reports which one matches.
pub fn verify_final_reduction(p: u32) -> VerificationRecord {
    require_prime(p);
    let stmt = StatementId::FinalReduction;
    if p == 2 {
        return VerificationRecord::out_of_domain(stmt, p, 1, "every statement requires an odd prime");
    }
    if p % 4 != 3 {
        return VerificationRecord::out_of_domain(stmt, p, 1, "requires p = 3 (mod 4)");
    }
    let m = modulus(p, 1);
    let m2 = modulus(p, 2);
    let pu = p as u64;
    let q = (pu + 1) / 4;
    let numerator = ValuatedResidue::from_integer(m2, 4 * pu + 2)
        .mul(&binom_valuated(pu + 1, ((pu + 1) / 2) as i64, m2))
        .mul(&binom_valuated((pu + 1) / 2, q as i64, m2));
    let denominator = ValuatedResidue::from_integer(m2, 4 * pu)
        .mul(&ValuatedResidue::new(m2, 0, m2.residue(16).pow(q).value()));
    let ratio = numerator.div(&denominator).expect("denominator nonzero");
    let displayed = binom_valuated((pu - 1) / 2, ((pu - 3) / 4) as i64, m)
        .collapse()
        .expect("binomial of units");
    let left = match ratio.collapse() {
        Err(Error::NegativeValuation { val }) => {
            return synthetic_mismatch(
                stmt,
                p,
                1,
                m,
                m.zero(),
                format!("left side not p-integral (valuation {val}); lhs/rhs fields synthetic"),
            );
        }
        Err(_) => unreachable!("collapse only fails with NegativeValuation"),
        Ok(r) => r.reduce_mod_p(),
    };
    if left == displayed {
        VerificationRecord::checked(stmt, p, 1, left, displayed, "matches the right side as displayed")
    } else if left == -displayed {
        VerificationRecord::checked(
            stmt,
            p,
            1,
            left,
            -displayed,
            format!("matches the negated right side; displayed value is {}", displayed.value()),
        )
    } else {
        VerificationRecord::checked(
            stmt,
            p,
            1,
            left,
            displayed,
            format!(
                "matches neither the displayed right side {} nor its negation {}",
                displayed.value(),
                (-displayed).value()
            ),
        )
    }
}

/// The conjectured mod-p^2 value of S(-1/6) for p > 3:
/// (p/3) (p | 3) (4 (-2 | p) - 1) (mod p^2), reading p/3 as p times the
/// inverse of 3 and (p | 3), (-2 | p) as Legendre symbols.
pub fn verify_conjecture_zero(p: u32) -> VerificationRecord {
    require_prime(p);
    let stmt = StatementId::ConjZeroModp2;
    if p == 2 {
        return VerificationRecord::out_of_domain(stmt, p, 2, "every statement requires an odd prime");
    }
    if p == 3 {
        return VerificationRecord::out_of_domain(stmt, p, 2, "statement applies only for p > 3");
    }
    let m2 = modulus(p, 2);
    let lhs = lhs_sum(Rational64::new(-1, 6), m2).expect("6 coprime to p > 3");
    let leg_p3 = ntheory::legendre(p as i64, 3);
    let leg_m2p = ntheory::legendre(-2, p);
    let rhs = m2.residue(p as u64)
        * m2.residue(3).inv().expect("p > 3")
        * m2.residue_i64(leg_p3 as i64)
        * m2.residue_i64(4 * leg_m2p as i64 - 1);
    VerificationRecord::checked(
        stmt,
        p,
        2,
        lhs,
        rhs,
        format!("(p|3) = {leg_p3}, (-2|p) = {leg_m2p}"),
    )
}

/// The alternating supercongruence
/// `sum_{k=0}^{p-1} (-1)^k d_k(x)^2 = (-1)^(<x>_p) (mod p^2)`.
pub fn verify_sun_alternating(x: Rational64, p: u32) -> VerificationRecord {
    require_prime(p);
    let stmt = StatementId::SunAlternating;
    if p == 2 {
        return VerificationRecord::out_of_domain(stmt, p, 2, "every statement requires an odd prime");
    }
    if x.denom().rem_euclid(p as i64) == 0 {
        return VerificationRecord::out_of_domain(
            stmt,
            p,
            2,
            format!("x = {x} has denominator divisible by p"),
        );
    }
    let m2 = modulus(p, 2);
    let xr = m2.embed(*x.numer(), *x.denom()).expect("denominator checked");
    let d = d_sequence(xr, p - 1).expect("p - 1 < p");
    let mut sum = m2.zero();
    for k in 0..p as usize {
        let sq = d.get(k) * d.get(k);
        sum = if k % 2 == 0 { sum + sq } else { sum - sq };
    }
    let idx = residue_index(x, p).expect("denominator checked");
    let rhs = sign_pow(m2, idx);
    VerificationRecord::checked(stmt, p, 2, sum, rhs, format!("x = {x}; <x>_p = {idx}"))
}

/// The x arguments a campaign uses for DSQUARE_X and SUN_ALTERNATING when
/// no explicit list is given.
pub fn default_x_args() -> [Rational64; 6] {
    [
        Rational64::new(0, 1),
        Rational64::new(-1, 4),
        Rational64::new(-1, 6),
        Rational64::new(1, 4),
        Rational64::new(1, 6),
        Rational64::new(1, 3),
    ]
}

/// Runs one statement at one prime. Statements that take a rational
/// argument produce one record per entry of `xs` (or of the default list
/// when `xs` is empty); VANISHING_RANGE produces one record per family;
/// QUARTER_EVAL produces one per sign.
pub fn verify_statement(stmt: StatementId, p: u32, xs: &[Rational64]) -> Vec<VerificationRecord> {
    require_prime(p);
    let x_list: Vec<Rational64> = if xs.is_empty() && stmt.takes_x() {
        default_x_args().to_vec()
    } else {
        xs.to_vec()
    };
    match stmt {
        StatementId::Main1 => verify_main(1, p),
        StatementId::Main2 => verify_main(2, p),
        StatementId::Main3Literal => vec![verify_main(3, p).swap_remove(0)],
        StatementId::Main3Adjusted => vec![verify_main(3, p).swap_remove(1)],
        StatementId::Main4 => verify_main(4, p),
        StatementId::DsquareX => x_list.iter().map(|&x| verify_dsquare_x(x, p)).collect(),
        StatementId::CentralReduction => vec![verify_central_reduction(p)],
        StatementId::VanishingRange => XFamily::ALL
            .iter()
            .map(|&f| verify_vanishing_ranges(p, f))
            .collect(),
        StatementId::QuarterEval => verify_quarter_evaluations(p).to_vec(),
        StatementId::BcdeModp2 => vec![verify_bcde(p)],
        StatementId::FinalReduction => vec![verify_final_reduction(p)],
        StatementId::ConjZeroModp2 => vec![verify_conjecture_zero(p)],
        StatementId::SunAlternating => x_list
            .iter()
            .map(|&x| verify_sun_alternating(x, p))
            .collect(),
    }
}
