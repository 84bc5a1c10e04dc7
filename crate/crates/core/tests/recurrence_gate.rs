//! Gate for the three-term d-recurrence and the incremental binomial rows:
//! both must reproduce their definitional forms entrywise before any range
//! campaign is trusted.

use delannoy::modp::Modulus;
use delannoy::ntheory::sieve_primes;
use delannoy::sequences::{d_direct, d_sequence, gen_binom_pair_sequences, gen_binom_residue};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

#[test]
fn d_sequence_matches_d_direct_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd5e9);
    let primes = sieve_primes(3, 2000);
    for trial in 0..24 {
        let p = *primes.choose(&mut rng).unwrap();
        for e in [1, 2] {
            let m = Modulus::new(p, e).unwrap();
            let x = m.residue(rng.random_range(0..m.m()));
            let n = (p - 1).min(500);
            let d = d_sequence(x, n).unwrap();
            for k in 0..=n {
                assert_eq!(
                    d.get(k as usize),
                    d_direct(x, k).unwrap(),
                    "trial {trial}: p = {p}, e = {e}, x = {}, k = {k}",
                    x.value()
                );
            }
        }
    }
}

#[test]
fn binomial_rows_match_their_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let primes = sieve_primes(3, 2000);
    for _ in 0..12 {
        let p = *primes.choose(&mut rng).unwrap();
        let e = if rng.random_bool(0.5) { 1 } else { 2 };
        let m = Modulus::new(p, e).unwrap();
        let x = m.residue(rng.random_range(0..m.m()));
        let n = (p - 1).min(300);
        let (a, b) = gen_binom_pair_sequences(x, n).unwrap();
        for j in (0..=n).step_by(7) {
            assert_eq!(a.get(j as usize), gen_binom_residue(x, j).unwrap());
            let xj = x + m.residue(j as u64);
            assert_eq!(b.get(j as usize), gen_binom_residue(xj, j).unwrap());
        }
    }
}
