//! Deterministic corpora for the benchmarks.

use pseudofree::{ExceptionalOrbit, LocalData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A reproducible batch of valid local data: `count` datasets of the given
/// weight arity with 1 to 8 orbits and orders up to `max_p`.
pub fn corpus(seed: u64, count: usize, arity: usize, max_p: i64) -> Vec<LocalData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let orbits = (0..rng.random_range(1..=8usize))
                .map(|_| {
                    let p = rng.random_range(2..=max_p);
                    let ws: Vec<i64> = (0..arity)
                        .map(|_| loop {
                            let q = rng.random_range(1..p);
                            if gcd(q, p) == 1 {
                                break q;
                            }
                        })
                        .collect();
                    ExceptionalOrbit::new(p, ws).unwrap()
                })
                .collect();
            LocalData::new(arity, orbits).unwrap()
        })
        .collect()
}
