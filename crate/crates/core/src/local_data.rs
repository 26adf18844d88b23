//! Exceptional-orbit local data and its transformation calculus.
//!
//! A pseudo-free circle action on a closed `(2n+1)`-manifold is recorded by
//! its exceptional orbits. Each orbit carries the order `p ≥ 2` of its
//! isotropy group and `n` slice weights, units mod `p`. The Chern number of
//! the quotient is computed orbit by orbit:
//!
//! ```text
//! e = Σ_C  (q_1(C)^-1 ⋯ q_n(C)^-1  mod p(C)) / p(C)      in Q/Z
//! ```
//!
//! where the product of inverses is reduced mod `p(C)` before dividing.
//!
//! Canonical form, used for equality and serialization: weights reduced into
//! `[1, p−1]` and sorted ascending; orbits sorted lexicographically by
//! `(p, weights)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{mod_inverse, qmod_z, QmodZ, Rational};

/// One exceptional orbit: isotropy order `p ≥ 2` and slice weights in
/// canonical form (each in `[1, p−1]`, coprime to `p`, sorted ascending).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExceptionalOrbit {
    p: BigInt,
    weights: Vec<BigInt>,
    label: Option<String>,
}

impl ExceptionalOrbit {
    /// Builds an orbit, reducing weights into `[1, p−1]` and sorting them.
    /// Rejects `p < 2` and any weight not a unit mod `p`.
    pub fn new(
        p: impl Into<BigInt>,
        weights: impl IntoIterator<Item = impl Into<BigInt>>,
    ) -> Result<Self> {
        let p = p.into();
        if p < BigInt::from(2) {
            return Err(Error::InvalidOrder(p));
        }
        let mut ws = Vec::new();
        for w in weights {
            let w = w.into();
            let reduced = w.mod_floor(&p);
            if !reduced.gcd(&p).is_one() {
                return Err(Error::WeightNotUnit { q: w, p });
            }
            ws.push(reduced);
        }
        ws.sort();
        Ok(ExceptionalOrbit {
            p,
            weights: ws,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn order(&self) -> &BigInt {
        &self.p
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }

    pub fn weight_arity(&self) -> usize {
        self.weights.len()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `q_1^-1 ⋯ q_n^-1 mod p`, in `[1, p−1]`.
    pub fn inverse_product(&self) -> BigInt {
        let mut acc = BigInt::one();
        for q in &self.weights {
            let inv = mod_inverse(q.clone(), self.p.clone()).expect("canonical weights are units");
            acc = (acc * inv.value()).mod_floor(&self.p);
        }
        acc
    }

    /// This orbit's term in the Chern-number sum.
    pub fn contribution(&self) -> QmodZ {
        qmod_z(&Rational::new(self.inverse_product(), self.p.clone()))
    }
}

impl fmt::Display for ExceptionalOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({}; [{}])", self.p, ws.join(","))?;
        if let Some(l) = &self.label {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// The full local data of an action: the common weight arity `n ≥ 1` and a
/// canonically sorted multiset of exceptional orbits (possibly empty, for a
/// free action).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalData {
    arity: usize,
    orbits: Vec<ExceptionalOrbit>,
}

impl LocalData {
    pub fn new(arity: usize, mut orbits: Vec<ExceptionalOrbit>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::NotPositive {
                what: "weight arity",
                value: 0,
            });
        }
        for orbit in &orbits {
            if orbit.weight_arity() != arity {
                return Err(Error::WeightLength {
                    expected: arity,
                    got: orbit.weight_arity(),
                });
            }
        }
        orbits.sort();
        Ok(LocalData { arity, orbits })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn orbits(&self) -> &[ExceptionalOrbit] {
        &self.orbits
    }

    /// Parses possibly non-canonical raw data. Returns the canonical data
    /// plus a flag telling whether canonicalization changed anything
    /// (reduced weights, re-sorted weights or orbits).
    pub fn from_raw(arity: usize, raw: &[RawOrbit]) -> Result<(Self, bool)> {
        let violations = validate(arity, raw);
        if !violations.is_empty() {
            return Err(Error::InvalidLocalData(violations));
        }
        let mut orbits = Vec::with_capacity(raw.len());
        for r in raw {
            let mut orbit =
                ExceptionalOrbit::new(r.p, r.q.iter().copied()).expect("validated raw orbit");
            if let Some(l) = &r.label {
                orbit = orbit.with_label(l.clone());
            }
            orbits.push(orbit);
        }
        let as_built = orbits.clone();
        let data = LocalData::new(arity, orbits).expect("validated arity");
        let changed = data.orbits != as_built
            || raw.iter().zip(&as_built).any(|(r, o)| {
                r.q.iter()
                    .zip(o.weights())
                    .any(|(a, b)| &BigInt::from(*a) != b)
            });
        Ok((data, changed))
    }
}

impl fmt::Display for LocalData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.arity)?;
        for (i, orbit) in self.orbits.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{orbit}")?;
        }
        write!(f, "}}")
    }
}

/// Orbit data as it arrives from the outside world, prior to validation and
/// canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawOrbit {
    pub p: i64,
    pub q: Vec<i64>,
    pub label: Option<String>,
}

impl RawOrbit {
    pub fn new(p: i64, q: Vec<i64>) -> Self {
        RawOrbit { p, q, label: None }
    }
}

/// A reason why raw orbit data is not valid local data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BadArity,
    OrderTooSmall {
        orbit: usize,
        p: i64,
    },
    ZeroWeight {
        orbit: usize,
        index: usize,
    },
    NotUnit {
        orbit: usize,
        index: usize,
        q: i64,
        p: i64,
    },
    LengthMismatch {
        orbit: usize,
        expected: usize,
        got: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadArity => write!(f, "weight arity must be at least 1"),
            Violation::OrderTooSmall { orbit, p } => {
                write!(f, "orbit {orbit}: isotropy order {p} is less than 2")
            }
            Violation::ZeroWeight { orbit, index } => {
                write!(f, "orbit {orbit}: weight {index} is congruent to 0")
            }
            Violation::NotUnit { orbit, index, q, p } => {
                write!(f, "orbit {orbit}: weight {index} has gcd({q}, {p}) > 1")
            }
            Violation::LengthMismatch {
                orbit,
                expected,
                got,
            } => {
                write!(f, "orbit {orbit}: expected {expected} weights, got {got}")
            }
        }
    }
}

/// Reports every invariant violated by the raw data. Out-of-range weights
/// are not violations (they canonicalize); zero or non-unit residues, bad
/// orders, and length mismatches are.
pub fn validate(arity: usize, raw: &[RawOrbit]) -> Vec<Violation> {
    let mut violations = Vec::new();
    if arity == 0 {
        violations.push(Violation::BadArity);
    }
    for (i, orbit) in raw.iter().enumerate() {
        if orbit.p < 2 {
            violations.push(Violation::OrderTooSmall {
                orbit: i,
                p: orbit.p,
            });
        }
        if arity != 0 && orbit.q.len() != arity {
            violations.push(Violation::LengthMismatch {
                orbit: i,
                expected: arity,
                got: orbit.q.len(),
            });
        }
        if orbit.p >= 2 {
            let p = BigInt::from(orbit.p);
            for (j, &q) in orbit.q.iter().enumerate() {
                let reduced = BigInt::from(q).mod_floor(&p);
                if reduced.is_zero() {
                    violations.push(Violation::ZeroWeight { orbit: i, index: j });
                } else if !reduced.gcd(&p).is_one() {
                    violations.push(Violation::NotUnit {
                        orbit: i,
                        index: j,
                        q,
                        p: orbit.p,
                    });
                }
            }
        }
    }
    violations
}

/// The Chern number of the quotient, in Q/Z. The sum over orbits of the
/// inverse-product terms; the empty orbit list gives 0.
pub fn euler_mod_z(data: &LocalData) -> QmodZ {
    data.orbits
        .iter()
        .fold(QmodZ::zero(), |acc, orbit| &acc + &orbit.contribution())
}

/// Equivariant stabilization: raises the arity by one, every orbit gaining
/// a slice weight 1. Leaves the Chern number unchanged.
pub fn stabilize(data: &LocalData) -> LocalData {
    let orbits = data
        .orbits
        .iter()
        .map(|orbit| {
            let mut ws: Vec<BigInt> = orbit.weights.to_vec();
            ws.push(BigInt::one());
            let mut new_orbit =
                ExceptionalOrbit::new(orbit.p.clone(), ws).expect("stabilized weights stay units");
            if let Some(l) = &orbit.label {
                new_orbit = new_orbit.with_label(l.clone());
            }
            new_orbit
        })
        .collect();
    LocalData::new(data.arity + 1, orbits).expect("arity grows")
}

/// Local data of the quotient by the cyclic subgroup of order `r ≥ 1`
/// (acting through the circle). Each orbit (p; q) becomes (p; r^-1·q);
/// requires gcd(r, p) = 1 for every orbit. Scales the Chern number by r^n.
pub fn quotient_by_cyclic(data: &LocalData, r: i64) -> Result<LocalData> {
    if r < 1 {
        return Err(Error::NotPositive {
            what: "cyclic quotient order",
            value: r,
        });
    }
    let r = BigInt::from(r);
    let mut orbits = Vec::with_capacity(data.orbits.len());
    for orbit in &data.orbits {
        if !r.gcd(&orbit.p).is_one() {
            return Err(Error::NotCoprime {
                a: r,
                b: orbit.p.clone(),
            });
        }
        let rinv = mod_inverse(r.clone(), orbit.p.clone())?;
        let ws: Vec<BigInt> = orbit
            .weights
            .iter()
            .map(|q| (q * rinv.value()).mod_floor(&orbit.p))
            .collect();
        let mut new_orbit =
            ExceptionalOrbit::new(orbit.p.clone(), ws).expect("unit times unit is a unit");
        if let Some(l) = &orbit.label {
            new_orbit = new_orbit.with_label(l.clone());
        }
        orbits.push(new_orbit);
    }
    LocalData::new(data.arity, orbits)
}

fn to_big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Weights of the circle action induced on the quotient of a product model
/// by a commuting cyclic action of order `m`.
///
/// Input: circle weights `x = (x_0, ..., x_n)` and cyclic rotation numbers
/// `mv = (m_0, ..., m_n)` with `gcd(x_0, m) = gcd(m_0, m) = 1`. With
/// `a_i = m_0^-1·m_i mod m` fixed in `[0, m)`, the induced weights are
///
/// ```text
/// (x_0·m,  −x_0·a_1 + x_1,  ...,  −x_0·a_n + x_n)
/// ```
///
/// returned raw: entries may be zero or negative, and no orbit validity is
/// implied.
pub fn induced_action_weights(m: i64, x: &[i64], mv: &[i64]) -> Result<Vec<BigInt>> {
    induced_action_weights_big(&BigInt::from(m), &to_big(x), &to_big(mv))
}

fn induced_action_weights_big(m: &BigInt, x: &[BigInt], mv: &[BigInt]) -> Result<Vec<BigInt>> {
    if *m < BigInt::from(2) {
        return Err(Error::InvalidModulus(m.clone()));
    }
    if x.is_empty() || mv.is_empty() {
        return Err(Error::EmptyInput);
    }
    if x.len() != mv.len() {
        return Err(Error::LengthMismatch(x.len(), mv.len()));
    }
    let x0 = &x[0];
    if !x0.gcd(m).is_one() {
        return Err(Error::NotCoprime {
            a: x0.clone(),
            b: m.clone(),
        });
    }
    let m0inv = mod_inverse(mv[0].clone(), m.clone()).map_err(|_| Error::NotCoprime {
        a: mv[0].clone(),
        b: m.clone(),
    })?;
    let mut out = Vec::with_capacity(x.len());
    out.push(x0 * m);
    for i in 1..x.len() {
        let a_i = (m0inv.value() * &mv[i]).mod_floor(m);
        out.push(-x0 * a_i + &x[i]);
    }
    Ok(out)
}

/// Weights of the residual circle action when the cyclic group of order `m`
/// sits inside the circle itself.
///
/// Input: weights `x = (x_0, ..., x_n)` with `x_0 ≠ 0` and
/// `gcd(m, x_0) = 1`. With `a_i = x_0^-1·x_i mod m` fixed in `[0, m)`, each
/// `s_i = (−x_0·a_i + x_i)/m` is an exact integer; the result is
/// `(x_0, s_1, ..., s_n)` with the entries after the first reduced into
/// `[0, |x_0|)`.
pub fn residual_action_weights(m: i64, x: &[i64]) -> Result<Vec<BigInt>> {
    let m = BigInt::from(m);
    let x = to_big(x);
    if m < BigInt::from(2) {
        return Err(Error::InvalidModulus(m));
    }
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let x0 = &x[0];
    if x0.is_zero() {
        return Err(Error::ZeroLeadWeight);
    }
    if !x0.gcd(&m).is_one() {
        return Err(Error::NotCoprime {
            a: x0.clone(),
            b: m,
        });
    }
    let x0inv = mod_inverse(x0.clone(), m.clone())?;
    let x0abs = x0.abs();
    let mut out = Vec::with_capacity(x.len());
    out.push(x0.clone());
    for xi in &x[1..] {
        let a_i = (x0inv.value() * xi).mod_floor(&m);
        let numer = -x0 * &a_i + xi;
        let (s_i, rem) = numer.div_rem(&m);
        debug_assert!(rem.is_zero(), "division must be exact");
        out.push(s_i.mod_floor(&x0abs));
    }
    Ok(out)
}

/// Canonical orbit type from slice rotation numbers: the orbit whose
/// isotropy group of order `p` rotates the i-th slice coordinate by
/// `rotations[i]` (each a unit mod `p`). Built by inducing along the
/// standard product model and reducing to canonical form.
pub fn slice_normal_form(p: i64, rotations: &[i64]) -> Result<ExceptionalOrbit> {
    if p < 2 {
        return Err(Error::InvalidOrder(BigInt::from(p)));
    }
    if rotations.is_empty() {
        return Err(Error::EmptyInput);
    }
    let pb = BigInt::from(p);
    for &rot in rotations {
        if !BigInt::from(rot).gcd(&pb).is_one() {
            return Err(Error::NotCoprime {
                a: BigInt::from(rot),
                b: pb,
            });
        }
    }
    let mut x = vec![BigInt::zero(); rotations.len() + 1];
    x[0] = BigInt::one();
    let mut mv = Vec::with_capacity(rotations.len() + 1);
    mv.push(BigInt::one());
    for &rot in rotations {
        mv.push(-BigInt::from(rot));
    }
    let induced = induced_action_weights_big(&pb, &x, &mv)?;
    ExceptionalOrbit::new(pb, induced[1..].iter().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use proptest::prelude::*;

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn orbit(p: i64, q: &[i64]) -> ExceptionalOrbit {
        ExceptionalOrbit::new(p, q.iter().copied()).unwrap()
    }

    fn data(n: usize, orbits: &[(i64, &[i64])]) -> LocalData {
        LocalData::new(n, orbits.iter().map(|(p, q)| orbit(*p, q)).collect()).unwrap()
    }

    #[test]
    fn orbit_canonicalizes_weights() {
        let o = orbit(5, &[7, -2]);
        assert_eq!(o.weights(), &[int(2), int(3)]);
        assert_eq!(orbit(5, &[3, 2]).weights(), &[int(2), int(3)]);
        assert!(ExceptionalOrbit::new(4, [2i64]).is_err());
        assert!(ExceptionalOrbit::new(1, [1i64]).is_err());
        assert!(ExceptionalOrbit::new(5, [10i64]).is_err());
    }

    #[test]
    fn validate_flags_each_violation() {
        let v = validate(1, &[RawOrbit::new(4, vec![2])]);
        assert_eq!(
            v,
            vec![Violation::NotUnit {
                orbit: 0,
                index: 0,
                q: 2,
                p: 4
            }]
        );
        let v = validate(2, &[RawOrbit::new(5, vec![1])]);
        assert_eq!(
            v,
            vec![Violation::LengthMismatch {
                orbit: 0,
                expected: 2,
                got: 1
            }]
        );
        assert!(validate(1, &[RawOrbit::new(5, vec![7])]).is_empty());
        let v = validate(1, &[RawOrbit::new(1, vec![0])]);
        assert!(v.contains(&Violation::OrderTooSmall { orbit: 0, p: 1 }));
    }

    #[test]
    fn from_raw_reports_canonicalization() {
        let (d, changed) = LocalData::from_raw(1, &[RawOrbit::new(5, vec![7])]).unwrap();
        assert!(changed);
        assert_eq!(d, data(1, &[(5, &[2])]));

        let (_, changed) = LocalData::from_raw(1, &[RawOrbit::new(5, vec![2])]).unwrap();
        assert!(!changed);

        let (d, changed) =
            LocalData::from_raw(1, &[RawOrbit::new(7, vec![3]), RawOrbit::new(2, vec![1])])
                .unwrap();
        assert!(changed);
        assert_eq!(d.orbits()[0].order(), &int(2));

        let err = LocalData::from_raw(1, &[RawOrbit::new(4, vec![2])]).unwrap_err();
        assert!(matches!(err, Error::InvalidLocalData(v) if v.len() == 1));
    }

    #[test]
    fn euler_examples() {
        assert!(euler_mod_z(&data(1, &[])).is_zero());
        assert_eq!(
            euler_mod_z(&data(1, &[(5, &[2])])).representative(),
            &rational(3, 5)
        );
        assert_eq!(
            euler_mod_z(&data(3, &[(3, &[1, 1, 1])])).representative(),
            &rational(1, 3)
        );
        assert!(euler_mod_z(&data(1, &[(2, &[1]), (2, &[1])])).is_zero());
    }

    #[test]
    fn stabilize_examples() {
        let free = data(1, &[]);
        assert_eq!(stabilize(&free).arity(), 2);
        assert!(stabilize(&free).orbits().is_empty());

        let l = data(2, &[(5, &[2, 3])]);
        let s = stabilize(&l);
        assert_eq!(s, data(3, &[(5, &[1, 2, 3])]));
        assert_eq!(euler_mod_z(&s), euler_mod_z(&l));
        assert_eq!(euler_mod_z(&s).representative(), &rational(1, 5));

        let l = data(3, &[(7, &[2, 2, 2])]);
        let s = stabilize(&l);
        assert_eq!(euler_mod_z(&s).representative(), &rational(1, 7));
    }

    #[test]
    fn quotient_examples() {
        let l = data(2, &[(5, &[2, 3])]);
        let q = quotient_by_cyclic(&l, 2).unwrap();
        assert_eq!(q, data(2, &[(5, &[1, 4])]));
        assert_eq!(euler_mod_z(&q).representative(), &rational(4, 5));

        assert_eq!(quotient_by_cyclic(&l, 1).unwrap(), l);

        assert_eq!(
            quotient_by_cyclic(&l, 5).unwrap_err(),
            Error::NotCoprime {
                a: int(5),
                b: int(5)
            }
        );
        assert!(quotient_by_cyclic(&l, 0).is_err());
    }

    #[test]
    fn induced_action_weight_examples() {
        assert_eq!(
            induced_action_weights(5, &[1, 0], &[1, -2]).unwrap(),
            vec![int(5), int(-3)]
        );
        assert_eq!(
            induced_action_weights(2, &[1, 0], &[1, 0]).unwrap(),
            vec![int(2), int(0)]
        );
        assert_eq!(
            induced_action_weights(5, &[1, 0], &[2, 3]).unwrap(),
            vec![int(5), int(-4)]
        );
        assert!(induced_action_weights(6, &[2, 0], &[1, 1]).is_err());
        assert!(induced_action_weights(5, &[1, 0], &[5, 1]).is_err());
        assert!(induced_action_weights(1, &[1, 0], &[1, 1]).is_err());
    }

    #[test]
    fn residual_action_weight_examples() {
        assert_eq!(
            residual_action_weights(2, &[5, 1]).unwrap(),
            vec![int(5), int(3)]
        );
        assert_eq!(
            residual_action_weights(1, &[5, 1]).unwrap_err(),
            Error::InvalidModulus(int(1))
        );
        assert_eq!(
            residual_action_weights(3, &[4, 3]).unwrap(),
            vec![int(4), int(1)]
        );
        assert_eq!(
            residual_action_weights(3, &[0, 1]).unwrap_err(),
            Error::ZeroLeadWeight
        );
        assert!(residual_action_weights(4, &[2, 1]).is_err());
    }

    #[test]
    fn slice_normal_form_examples() {
        assert_eq!(slice_normal_form(5, &[2, 3]).unwrap(), orbit(5, &[2, 3]));
        assert_eq!(slice_normal_form(5, &[7, -2]).unwrap(), orbit(5, &[2, 3]));
        assert_eq!(
            slice_normal_form(2, &[1, 1, 1]).unwrap(),
            orbit(2, &[1, 1, 1])
        );
        assert!(slice_normal_form(4, &[2]).is_err());
        assert!(slice_normal_form(1, &[1]).is_err());
    }

    #[test]
    fn orbits_sort_canonically() {
        let d = data(1, &[(5, &[3]), (2, &[1]), (5, &[2])]);
        let orders: Vec<_> = d.orbits().iter().map(|o| o.order().clone()).collect();
        assert_eq!(orders, vec![int(2), int(5), int(5)]);
        assert_eq!(d.orbits()[1].weights(), &[int(2)]);
    }

    #[test]
    fn labels_survive_transformations() {
        let o = orbit(5, &[2]).with_label("C1");
        let d = LocalData::new(1, vec![o]).unwrap();
        let s = stabilize(&d);
        assert_eq!(s.orbits()[0].label(), Some("C1"));
        let q = quotient_by_cyclic(&d, 2).unwrap();
        assert_eq!(q.orbits()[0].label(), Some("C1"));
    }

    fn units(p: i64) -> Vec<i64> {
        (1..p).filter(|q| q.gcd(&p) == 1).collect()
    }

    fn arb_orbit(n: usize) -> impl Strategy<Value = ExceptionalOrbit> {
        (2i64..40, proptest::collection::vec(any::<u32>(), n)).prop_map(move |(p, seeds)| {
            let us = units(p);
            let ws: Vec<i64> = seeds.iter().map(|s| us[*s as usize % us.len()]).collect();
            ExceptionalOrbit::new(p, ws).unwrap()
        })
    }

    fn arb_local_data() -> impl Strategy<Value = LocalData> {
        (1usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(arb_orbit(n), 0..4)
                .prop_map(move |orbits| LocalData::new(n, orbits).unwrap())
        })
    }

    fn coprime_r(d: &LocalData, start: i64) -> i64 {
        (start.max(1)..)
            .find(|r| {
                d.orbits()
                    .iter()
                    .all(|o| BigInt::from(*r).gcd(o.order()).is_one())
            })
            .unwrap()
    }

    proptest! {
        #[test]
        fn euler_is_additive_over_orbit_lists(a in arb_local_data(), b in arb_local_data()) {
            prop_assume!(a.arity() == b.arity());
            let mut orbits = a.orbits().to_vec();
            orbits.extend(b.orbits().to_vec());
            let joined = LocalData::new(a.arity(), orbits).unwrap();
            prop_assert_eq!(
                euler_mod_z(&joined),
                &euler_mod_z(&a) + &euler_mod_z(&b)
            );
        }

        #[test]
        fn stabilization_preserves_euler(d in arb_local_data()) {
            let s = stabilize(&d);
            prop_assert_eq!(s.arity(), d.arity() + 1);
            prop_assert_eq!(euler_mod_z(&s), euler_mod_z(&d));
        }

        #[test]
        fn quotient_scales_euler_by_r_to_n(d in arb_local_data(), start in 1i64..30) {
            let r = coprime_r(&d, start);
            let q = quotient_by_cyclic(&d, r).unwrap();
            let expected = euler_mod_z(&d).scale(&BigInt::from(r).pow(d.arity() as u32));
            prop_assert_eq!(euler_mod_z(&q), expected);
        }

        #[test]
        fn quotients_compose(d in arb_local_data(), s1 in 1i64..20, s2 in 1i64..20) {
            let r = coprime_r(&d, s1);
            let s = coprime_r(&d, s2);
            let stepped = quotient_by_cyclic(&quotient_by_cyclic(&d, r).unwrap(), s).unwrap();
            let direct = quotient_by_cyclic(&d, r * s).unwrap();
            prop_assert_eq!(stepped, direct);
        }

        #[test]
        fn canonicalization_is_idempotent(d in arb_local_data()) {
            let rebuilt = LocalData::new(
                d.arity(),
                d.orbits()
                    .iter()
                    .map(|o| ExceptionalOrbit::new(o.order().clone(), o.weights().to_vec()).unwrap())
                    .collect(),
            )
            .unwrap();
            prop_assert_eq!(rebuilt, d);
        }

        #[test]
        fn single_orbit_denominator_divides_p(o in arb_orbit(3)) {
            let d = LocalData::new(3, vec![o.clone()]).unwrap();
            let e = euler_mod_z(&d);
            prop_assert!(o.order().mod_floor(e.representative().denom()).is_zero());
        }
    }
}
