//! Primality testing, prime sieving, quadratic symbols, modular square
//! roots, and the normalized two-squares decomposition.

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Integer square root, rounded down.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Deterministic Miller-Rabin. The bases 2, 3, 5, 7 decide primality for
/// every n below 3_215_031_751, which covers the full u32 range used here.
pub fn is_prime(n: u32) -> bool {
    let n = n as u64;
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn simple_sieve(limit: u32) -> Vec<u32> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// All primes in `[lo, hi]` in ascending order, by a segmented sieve of
/// Eratosthenes. Segments are independent, so the range can also be split
/// across workers by the caller.
pub fn sieve_primes(lo: u32, hi: u32) -> Vec<u32> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let lo = lo.max(2) as u64;
    let hi = hi as u64;
    let base = simple_sieve(isqrt(hi) as u32);
    let mut primes = Vec::new();
    const SEGMENT: u64 = 1 << 20;
    let mut start = lo;
    let mut mark = Vec::new();
    while start <= hi {
        let end = hi.min(start + SEGMENT - 1);
        let len = (end - start + 1) as usize;
        mark.clear();
        mark.resize(len, false);
        for &q in &base {
            let q = q as u64;
            if q * q > end {
                break;
            }
            let mut j = (q * q).max(start.div_ceil(q) * q);
            while j <= end {
                mark[(j - start) as usize] = true;
                j += q;
            }
        }
        for (i, &m) in mark.iter().enumerate() {
            let n = start + i as u64;
            if !m && n >= 2 {
                primes.push(n as u32);
            }
        }
        start = end + 1;
    }
    primes
}

/// Legendre symbol (a | q) for an odd prime q, by Euler's criterion:
/// a^((q-1)/2) is 1, -1, or 0 modulo q.
pub fn legendre(a: i64, q: u32) -> i32 {
    debug_assert!(q % 2 == 1 && is_prime(q));
    let q = q as u64;
    let r = a.rem_euclid(q as i64) as u64;
    if r == 0 {
        return 0;
    }
    let t = pow_mod(r, (q - 1) / 2, q);
    if t == 1 {
        1
    } else {
        debug_assert_eq!(t, q - 1);
        -1
    }
}

/// Square root of a modulo the odd prime q via Tonelli-Shanks. Returns the
/// smaller of the two roots. Fails with `NonResidue` when (a | q) = -1.
pub fn sqrt_mod(a: i64, q: u32) -> Result<u32> {
    let qq = q as u64;
    let a = a.rem_euclid(qq as i64) as u64;
    if a == 0 {
        return Ok(0);
    }
    if legendre(a as i64, q) != 1 {
        return Err(Error::NonResidue { a, q });
    }
    let r = if qq % 4 == 3 {
        pow_mod(a, (qq + 1) / 4, qq)
    } else {
        // q - 1 = d * 2^s with d odd
        let mut d = qq - 1;
        let mut s = 0u32;
        while d & 1 == 0 {
            d >>= 1;
            s += 1;
        }
        // smallest quadratic non-residue as the generator; deterministic
        let mut z = 2u64;
        while legendre(z as i64, q) != -1 {
            z += 1;
        }
        let mut c = pow_mod(z, d, qq);
        let mut t = pow_mod(a, d, qq);
        let mut r = pow_mod(a, (d + 1) / 2, qq);
        let mut m = s;
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, qq);
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), qq);
            r = mul_mod(r, b, qq);
            c = mul_mod(b, b, qq);
            t = mul_mod(t, c, qq);
            m = i;
        }
        r
    };
    debug_assert_eq!(mul_mod(r, r, qq), a);
    Ok(r.min(qq - r) as u32)
}

/// The decomposition p = x^2 + y^2 of a prime p = 1 (mod 4), normalized so
/// that x = 1 (mod 4) (which fixes x including its sign) and y > 0 is even.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwoSquares {
    pub p: u32,
    pub x: i64,
    pub y: u32,
}

/// Two-squares decomposition by Cornacchia descent from a square root of
/// -1 modulo p.
pub fn two_squares(p: u32) -> Result<TwoSquares> {
    if p % 4 != 1 || !is_prime(p) {
        return Err(Error::WrongResidueClass { p, expected: 1 });
    }
    let z = sqrt_mod(-1, p)? as u64;
    let pp = p as u64;
    let bound = isqrt(pp);
    let mut a = pp;
    let mut b = z;
    while b > bound {
        let r = a % b;
        a = b;
        b = r;
    }
    let c = isqrt(pp - b * b);
    debug_assert_eq!(b * b + c * c, pp);
    let (odd, even) = if b % 2 == 1 { (b, c) } else { (c, b) };
    let x = if odd % 4 == 1 { odd as i64 } else { -(odd as i64) };
    Ok(TwoSquares { p, x, y: even as u32 })
}
