//! O(p) kernels for the sequences entering the congruence sums: values of
//! the Delannoy polynomials d_k(x), the central binomial ratios
//! C(2k,k)/4^k, generalized binomials C(x,k), and integer binomials with
//! exact p-adic valuation.

use crate::error::{Error, Result};
use crate::modp::{Modulus, Residue, ValuatedResidue};

/// A dense run of residues indexed 0..=N, all reduced modulo the same p^e.
#[derive(Clone, Debug)]
pub struct SequenceBuffer {
    modulus: Modulus,
    values: Vec<u64>,
}

impl SequenceBuffer {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> Residue {
        self.modulus.residue(self.values[i])
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// Inverses of 1..=n modulo p^e with a single extended-gcd call: build the
/// factorial row, invert the last entry, and unwind. Requires n <= p - 1 so
/// every factor is a unit.
pub fn unit_inverses(m: Modulus, n: u32) -> Result<Vec<u64>> {
    if n >= m.p() {
        return Err(Error::IndexTooLarge { k: n as u64, p: m.p() });
    }
    let n = n as usize;
    let mut fact = vec![1u64; n + 1];
    for i in 1..=n {
        fact[i] = (m.residue(fact[i - 1]) * m.residue(i as u64)).value();
    }
    let mut inv_fact = vec![1u64; n + 1];
    inv_fact[n] = m.residue(fact[n]).inv().expect("factorial of units").value();
    for i in (1..=n).rev() {
        inv_fact[i - 1] = (m.residue(inv_fact[i]) * m.residue(i as u64)).value();
    }
    let mut inv = vec![0u64; n + 1];
    for i in 1..=n {
        inv[i] = (m.residue(inv_fact[i]) * m.residue(fact[i - 1])).value();
    }
    Ok(inv)
}

/// Integer binomial C(n,k) as p^v * unit with the unit coprime to p,
/// computed by the stripped-product method: every factor of the rising
/// numerator and of the denominator has its p-powers removed and counted,
/// and the denominator is inverted once at the end. Cost is O(k).
///
/// Out-of-range k (negative or above n) gives the exact zero.
pub fn binom_valuated(n: u64, k: i64, m: Modulus) -> ValuatedResidue {
    if k < 0 || k as u64 > n {
        return ValuatedResidue::exact_zero(m);
    }
    let k = k as u64;
    let p = m.p() as u64;
    let mm = m.m();
    let mut val = 0i64;
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 1..=k {
        let mut t = n - k + i;
        while t % p == 0 {
            t /= p;
            val += 1;
        }
        num = ((num as u128 * (t % mm) as u128) % mm as u128) as u64;
        let mut t = i;
        while t % p == 0 {
            t /= p;
            val -= 1;
        }
        den = ((den as u128 * (t % mm) as u128) % mm as u128) as u64;
    }
    let unit = (m.residue(num) * m.residue(den).inv().expect("stripped denominator")).value();
    debug_assert!(val >= 0, "binomial coefficients are p-integral");
    ValuatedResidue::new(m, val, unit)
}

/// Generalized binomial C(x,k) = x(x-1)...(x-k+1)/k! for a residue x.
/// Every division is by i <= k, so k < p is required.
pub fn gen_binom_residue(x: Residue, k: u32) -> Result<Residue> {
    let m = x.modulus();
    if k >= m.p() {
        return Err(Error::IndexTooLarge { k: k as u64, p: m.p() });
    }
    let mut acc = m.one();
    let mut cur = x;
    for i in 1..=k {
        acc = acc * cur * m.residue(i as u64).inv().expect("i < p");
        cur = cur - m.one();
    }
    Ok(acc)
}

/// The rows C(x,j) and C(x+j,j) for j = 0..=n_max, each advanced by one
/// multiplication and one table inverse per step:
/// C(x,j+1) = C(x,j)(x-j)/(j+1) and C(x+j+1,j+1) = C(x+j,j)(x+j+1)/(j+1).
pub fn gen_binom_pair_sequences(x: Residue, n_max: u32) -> Result<(SequenceBuffer, SequenceBuffer)> {
    let m = x.modulus();
    let inv = unit_inverses(m, n_max)?;
    let n = n_max as usize;
    let mut a = vec![1u64; n + 1];
    let mut b = vec![1u64; n + 1];
    for j in 0..n {
        let ij = m.residue(inv[j + 1]);
        a[j + 1] = (m.residue(a[j]) * (x - m.residue(j as u64)) * ij).value();
        b[j + 1] = (m.residue(b[j]) * (x + m.residue(j as u64 + 1)) * ij).value();
    }
    Ok((
        SequenceBuffer { modulus: m, values: a },
        SequenceBuffer { modulus: m, values: b },
    ))
}

/// The defining sum d_n(x) = sum_{k=0}^{n} C(n,k) C(x,k) 2^k, evaluated in
/// O(n). This is the oracle the three-term recurrence is gated against.
pub fn d_direct(x: Residue, n: u32) -> Result<Residue> {
    let m = x.modulus();
    let inv = unit_inverses(m, n)?;
    let mut sum = m.one();
    let mut bin = m.one();
    let mut cx = m.one();
    let mut pw2 = m.one();
    let two = m.residue(2);
    for k in 0..n {
        let ik = m.residue(inv[k as usize + 1]);
        bin = bin * m.residue((n - k) as u64) * ik;
        cx = cx * (x - m.residue(k as u64)) * ik;
        pw2 = pw2 * two;
        sum = sum + bin * cx * pw2;
    }
    Ok(sum)
}

/// d_0(x)..d_N(x) in O(N) via the contiguous three-term recurrence
/// (n+1) d_{n+1} = (2x+1) d_n + n d_{n-1}, d_0 = 1, d_1 = 1 + 2x.
pub fn d_sequence(x: Residue, n_max: u32) -> Result<SequenceBuffer> {
    let m = x.modulus();
    let inv = unit_inverses(m, n_max)?;
    let n = n_max as usize;
    let mut values = vec![1u64; n + 1];
    if n >= 1 {
        let s = m.one() + x + x;
        values[1] = s.value();
        for i in 1..n {
            let t = s * m.residue(values[i]) + m.residue(i as u64) * m.residue(values[i - 1]);
            values[i + 1] = (t * m.residue(inv[i + 1])).value();
        }
    }
    Ok(SequenceBuffer { modulus: m, values })
}

/// c_0..c_N with c_k = C(2k,k)/4^k, via c_{k+1} = c_k (2k+1)/(2k+2).
/// Every denominator 2k+2 with k+1 <= N <= p-1 is a unit, so the row is
/// exact modulo p^e even where the entries themselves are divisible by p.
pub fn central_ratio_sequence(n_max: u32, m: Modulus) -> Result<SequenceBuffer> {
    if n_max >= m.p() {
        return Err(Error::IndexTooLarge { k: n_max as u64, p: m.p() });
    }
    let inv = unit_inverses(m, n_max)?;
    let inv2 = m.residue(2).inv().expect("p odd");
    let n = n_max as usize;
    let mut values = vec![1u64; n + 1];
    for k in 0..n {
        let t = m.residue(values[k]) * m.residue(2 * k as u64 + 1) * inv2 * m.residue(inv[k + 1]);
        values[k + 1] = t.value();
    }
    Ok(SequenceBuffer { modulus: m, values })
}
