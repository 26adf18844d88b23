//! Deterministic generators shared by the integration suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use pseudofree::{ExceptionalOrbit, LocalData};
use rand::Rng;

pub fn units(p: i64) -> Vec<i64> {
    (1..p).filter(|q| q.gcd(&p) == 1).collect()
}

pub fn random_orbit(rng: &mut impl Rng, arity: usize, max_p: i64) -> ExceptionalOrbit {
    let p = rng.random_range(2..=max_p);
    let us = units(p);
    let ws: Vec<i64> = (0..arity)
        .map(|_| us[rng.random_range(0..us.len())])
        .collect();
    ExceptionalOrbit::new(p, ws).unwrap()
}

pub fn random_local_data(
    rng: &mut impl Rng,
    max_arity: usize,
    max_orbits: usize,
    max_p: i64,
) -> LocalData {
    let arity = rng.random_range(1..=max_arity);
    let count = rng.random_range(0..=max_orbits);
    let orbits = (0..count)
        .map(|_| random_orbit(rng, arity, max_p))
        .collect();
    LocalData::new(arity, orbits).unwrap()
}

/// Smallest r ≥ `lo` coprime to every isotropy order of `data`.
pub fn coprime_r(data: &LocalData, lo: i64) -> i64 {
    (lo.max(1)..)
        .find(|r| {
            data.orbits()
                .iter()
                .all(|o| BigInt::from(*r).gcd(o.order()).is_one())
        })
        .unwrap()
}

/// The `count` smallest primes strictly greater than `bound`.
pub fn admissible_primes(bound: i64, count: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = bound + 1;
    while out.len() < count {
        if pseudofree::models::is_prime(candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// Visits every nondecreasing `len`-tuple with entries in `1..=max`.
pub fn for_each_multiset(max: i64, len: usize, visit: &mut impl FnMut(&[i64])) {
    fn rec(min: i64, max: i64, left: usize, acc: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
        if left == 0 {
            visit(acc);
            return;
        }
        for v in min..=max {
            acc.push(v);
            rec(v, max, left - 1, acc, visit);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity(len);
    rec(1, max, len, &mut acc, visit);
}

/// Visits every `len`-tuple over the given value list (cartesian power).
pub fn for_each_tuple(values: &[i64], len: usize, visit: &mut impl FnMut(&[i64])) {
    fn rec(values: &[i64], left: usize, acc: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
        if left == 0 {
            visit(acc);
            return;
        }
        for &v in values {
            acc.push(v);
            rec(values, left - 1, acc, visit);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity(len);
    rec(values, len, &mut acc, visit);
}

/// Visits every strictly increasing `len`-tuple with entries in `lo..=hi`.
pub fn for_each_combination(lo: i64, hi: i64, len: usize, visit: &mut impl FnMut(&[i64])) {
    fn rec(min: i64, hi: i64, left: usize, acc: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
        if left == 0 {
            visit(acc);
            return;
        }
        for v in min..=hi {
            acc.push(v);
            rec(v + 1, hi, left - 1, acc, visit);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity(len);
    rec(lo, hi, len, &mut acc, visit);
}
