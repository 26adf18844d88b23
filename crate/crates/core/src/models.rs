//! Model actions with known closed-form invariants.
//!
//! These constructions serve as oracles for the local-data calculus: their
//! Chern numbers are computable two independent ways (closed form and the
//! orbit sum), and the test suites require the routes to agree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{gcd_all, lcm_all, mod_inverse, qmod_z, QmodZ, Rational};
use crate::local_data::{ExceptionalOrbit, LocalData};

/// A linear circle action on an odd sphere, given by its nonzero integer
/// weights `(p_1, ..., p_n)`: the circle rotates the i-th complex
/// coordinate `p_i` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereAction {
    weights: Vec<i64>,
}

impl SphereAction {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight(i));
        }
        Ok(SphereAction { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Effective means the weights have no common divisor beyond 1.
    pub fn is_effective(&self) -> bool {
        gcd_all(self.weights.iter().copied())
            .map(|g| g.is_one())
            .unwrap_or(false)
    }

    /// Pseudo-free means every pair of weights is coprime, so all
    /// exceptional orbits are isolated.
    pub fn is_pseudo_free(&self) -> bool {
        for (i, a) in self.weights.iter().enumerate() {
            for b in &self.weights[i + 1..] {
                if !BigInt::from(*a).gcd(&BigInt::from(*b)).is_one() {
                    return false;
                }
            }
        }
        true
    }
}

/// The Chern number of the sphere quotient in closed form: `1/(p_1⋯p_n)`,
/// signed.
pub fn sphere_chern(action: &SphereAction) -> Rational {
    let prod = action
        .weights
        .iter()
        .fold(BigInt::one(), |acc, &w| acc * BigInt::from(w));
    Rational::new(BigInt::one(), prod)
}

/// Local data of a pseudo-free sphere action (pairwise-coprime weights,
/// at least two of them). Each weight with `|p_i| ≥ 2` contributes the
/// orbit of its coordinate circle: isotropy order `|p_i|`, slice weights
/// the remaining weights mod `|p_i|`. A negative fiber weight reverses the
/// orientation of the orbit direction, which is compensated by reversing
/// exactly one slice coordinate, i.e. negating one slice weight.
pub fn sphere_local_data(action: &SphereAction) -> Result<LocalData> {
    let n = action.weights.len();
    if n < 2 {
        return Err(Error::EmptyInput);
    }
    for (i, a) in action.weights.iter().enumerate() {
        for b in &action.weights[i + 1..] {
            let g = BigInt::from(*a).gcd(&BigInt::from(*b));
            if !g.is_one() {
                return Err(Error::NotPairwiseCoprime {
                    a: BigInt::from(*a),
                    b: BigInt::from(*b),
                });
            }
        }
    }
    let mut orbits = Vec::new();
    for (i, &p) in action.weights.iter().enumerate() {
        let order = p.unsigned_abs();
        if order < 2 {
            continue;
        }
        let mut slice: Vec<i64> = action
            .weights
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, &q)| q)
            .collect();
        if p < 0 {
            slice[0] = -slice[0];
        }
        orbits.push(ExceptionalOrbit::new(order as i64, slice)?);
    }
    LocalData::new(n - 1, orbits)
}

/// Lens-space model: the free quotient `S^3/Z_p` re-acted on so that one
/// exceptional orbit of type `(p; q)` appears. Returns the local data and
/// the predicted Chern number `q^-1/p`, computed without the orbit sum.
pub fn lens_local_data(p: i64, q: i64) -> Result<(LocalData, QmodZ)> {
    let orbit = ExceptionalOrbit::new(p, [q])?;
    let predicted = qmod_z(&Rational::new(
        mod_inverse(q, p)?.value().clone(),
        BigInt::from(p),
    ));
    Ok((LocalData::new(1, vec![orbit])?, predicted))
}

/// A closed action with exactly one exceptional orbit `(p; q_1, ..., q_n)`,
/// built iteratively: seed with a lens model, then alternately stabilize
/// and quotient by cyclic groups so the weight vector fills in one slot per
/// step. The predicted Chern number is accumulated through the same steps
/// (stabilization preserves it, an order-r quotient scales it by r^arity),
/// giving a value route independent of the orbit-sum formula.
pub fn single_orbit_local_data(p: i64, q: &[i64]) -> Result<(LocalData, QmodZ)> {
    if q.is_empty() {
        return Err(Error::EmptyInput);
    }
    let pb = BigInt::from(p);
    // r_i = q_i·q_{i+1}^-1 mod p, with r_n = q_n: then q_j = r_j⋯r_n mod p.
    let mut rs = Vec::with_capacity(q.len());
    for i in 0..q.len() {
        let r = if i + 1 < q.len() {
            (BigInt::from(q[i]) * mod_inverse(q[i + 1], p)?.value()).mod_floor(&pb)
        } else {
            BigInt::from(q[i]).mod_floor(&pb)
        };
        if !r.gcd(&pb).is_one() {
            return Err(Error::WeightNotUnit {
                q: BigInt::from(q[i]),
                p: pb,
            });
        }
        rs.push(r);
    }

    let (mut data, mut predicted) = lens_local_data(p, i64_exact(&rs[0]))?;
    for (i, r) in rs.iter().enumerate().skip(1) {
        data = crate::local_data::stabilize(&data);
        let t = mod_inverse(r.clone(), pb.clone())?;
        let t_i64 = i64_exact(t.value());
        data = crate::local_data::quotient_by_cyclic(&data, t_i64)?;
        predicted = predicted.scale(&t.value().pow((i + 1) as u32));
    }
    debug_assert_eq!(predicted, crate::local_data::euler_mod_z(&data));
    Ok((data, predicted))
}

fn i64_exact(x: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    x.to_i64().expect("value fits i64 by construction")
}

/// Kawasaki characteristic number `ℓ_k` of a weighted projective quotient:
/// the least common multiple, over all (k+1)-element subsets of the
/// weights, of (product of subset)/(gcd of subset). Weights must be
/// positive and effective; `1 ≤ k ≤ n` for n+1 weights.
pub fn kawasaki_ell(k: usize, weights: &[i64]) -> Result<BigInt> {
    if weights.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&w) = weights.iter().find(|&&w| w < 1) {
        return Err(Error::NotPositive {
            what: "weight",
            value: w,
        });
    }
    let g = gcd_all(weights.iter().copied())?;
    if !g.is_one() {
        return Err(Error::NotEffective(g));
    }
    let n = weights.len() - 1;
    if k < 1 || k > n {
        return Err(Error::BadIndex { k, max: n });
    }
    let mut terms = Vec::new();
    subsets_of_size(weights.len(), k + 1, &mut |subset| {
        let mut prod = BigInt::one();
        let mut g = BigInt::zero();
        for &i in subset {
            prod *= BigInt::from(weights[i]);
            g = g.gcd(&BigInt::from(weights[i]));
        }
        terms.push(prod / g);
    });
    lcm_all(terms)
}

fn subsets_of_size(n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        acc: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if acc.len() == k {
            visit(acc);
            return;
        }
        let remaining = k - acc.len();
        for i in start..=n - remaining {
            acc.push(i);
            rec(i + 1, n, k, acc, visit);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity(k);
    rec(0, n, k, &mut acc, visit);
}

/// The Chern number of a weighted projective quotient of `S^(2n+1)` through
/// the characteristic-class calculus: the degree-2 generator is γ_1/ℓ_1 and
/// its n-th power evaluates against (ℓ_1^n/ℓ_n)·γ_n, so the number is
/// (1/ℓ_1)^n · (ℓ_1^n/ℓ_n). Kept in this two-factor form on purpose; tests
/// compare it with the closed form from the sphere side.
pub fn kawasaki_chern(weights: &[i64]) -> Result<Rational> {
    if weights.len() < 2 {
        return Err(Error::EmptyInput);
    }
    let n = weights.len() - 1;
    let ell1 = kawasaki_ell(1, weights)?;
    let elln = kawasaki_ell(n, weights)?;
    let ell1_pow = ell1.pow(n as u32);
    let generator_power = Rational::new(BigInt::one(), ell1_pow.clone());
    let pairing = Rational::new(ell1_pow, elln);
    Ok(generator_power * pairing)
}

/// Isolated fixed points of a circle action on a closed almost-complex
/// manifold: each point carries its `n ≥ 1` nonzero integer weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    arity: usize,
    points: Vec<Vec<i64>>,
}

impl FixedPointData {
    pub fn new(arity: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::NotPositive {
                what: "weight arity",
                value: 0,
            });
        }
        for point in &points {
            if point.len() != arity {
                return Err(Error::WeightLength {
                    expected: arity,
                    got: point.len(),
                });
            }
            if let Some(i) = point.iter().position(|&w| w == 0) {
                return Err(Error::ZeroWeight(i));
            }
        }
        Ok(FixedPointData { arity, points })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }
}

/// Deterministic Miller-Rabin, exact for every modulus below 2^64.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

/// Suspension of fixed-point data to pseudo-free local data: composing the
/// action with the p-th power map on the fiber direction turns each
/// isolated fixed point with weights `q⃗` into an exceptional orbit
/// `(p; q⃗ mod p)`. Requires `p` prime and larger than every `|q_i|`, so
/// the reduced weights are nonzero units.
pub fn suspend_fixed_points(fixed: &FixedPointData, p: i64) -> Result<LocalData> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    for point in &fixed.points {
        for &q in point {
            if q.abs() >= p {
                return Err(Error::PrimeTooSmall { p, q });
            }
        }
    }
    let orbits = fixed
        .points
        .iter()
        .map(|point| ExceptionalOrbit::new(p, point.iter().copied()))
        .collect::<Result<Vec<_>>>()?;
    LocalData::new(fixed.arity, orbits)
}

/// Fixed-point data of the standard circle action on complex projective
/// n-space induced by distinct integer parameters `(a_0, ..., a_n)`: the
/// i-th coordinate point is fixed with weights `(a_j − a_i)` for `j ≠ i`.
pub fn projective_space_fixed_data(params: &[i64]) -> Result<FixedPointData> {
    if params.len() < 2 {
        return Err(Error::EmptyInput);
    }
    for (i, &a) in params.iter().enumerate() {
        if params[i + 1..].contains(&a) {
            return Err(Error::DuplicateParameter(a));
        }
    }
    let points = params
        .iter()
        .enumerate()
        .map(|(i, &ai)| {
            params
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, &aj)| aj - ai)
                .collect()
        })
        .collect();
    FixedPointData::new(params.len() - 1, points)
}

/// Dimension of the singular stratum of the orbit space of a linear sphere
/// action with the given nonzero effective weights. For each prime `d`
/// dividing at least one weight, the points with isotropy containing `Z_d`
/// form the unit sphere of the coordinates divisible by `d`; its quotient
/// has dimension `2·m_d − 2` where `m_d` counts those coordinates. The
/// result is the maximum over primes, or −1 when the action is free.
pub fn sphere_singular_dim(weights: &[i64]) -> Result<i64> {
    if weights.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(i) = weights.iter().position(|&w| w == 0) {
        return Err(Error::ZeroWeight(i));
    }
    let g = gcd_all(weights.iter().copied())?;
    if !g.is_one() {
        return Err(Error::NotEffective(g));
    }
    let mut primes = std::collections::BTreeSet::new();
    for &w in weights {
        let mut m = w.unsigned_abs();
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                primes.insert(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.insert(m);
        }
    }
    let mut dim = -1i64;
    for d in primes {
        let m_d = weights.iter().filter(|w| w.unsigned_abs() % d == 0).count() as i64;
        dim = dim.max(2 * m_d - 2);
    }
    Ok(dim)
}

/// The two values the Chern number of a pseudo-free action with exceptional
/// orbit orders `(q_1, ..., q_k)` (pairwise coprime, each ≥ 2) can take
/// when the action lives on a homotopy sphere: `±1/(q_1⋯q_k)` in Q/Z. The
/// empty list (a free action) predicts 0.
pub fn liang_prediction(orders: &[i64]) -> Result<(QmodZ, QmodZ)> {
    for (i, &a) in orders.iter().enumerate() {
        if a < 2 {
            return Err(Error::InvalidOrder(BigInt::from(a)));
        }
        for &b in &orders[i + 1..] {
            if !BigInt::from(a).gcd(&BigInt::from(b)).is_one() {
                return Err(Error::NotPairwiseCoprime {
                    a: BigInt::from(a),
                    b: BigInt::from(b),
                });
            }
        }
    }
    let prod = orders
        .iter()
        .fold(BigInt::one(), |acc, &x| acc * BigInt::from(x));
    let plus = qmod_z(&Rational::new(BigInt::one(), prod.clone()));
    let minus = qmod_z(&Rational::new(-BigInt::one(), prod));
    Ok((plus, minus))
}
