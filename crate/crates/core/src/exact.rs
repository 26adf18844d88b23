//! Arbitrary-precision rational and modular arithmetic.
//!
//! Everything downstream reduces to four primitives defined here: reduced
//! rationals, residues with a fixed modulus, modular inverses, and the
//! canonical representative of a rational modulo 1. The conventions are
//! global for the crate:
//!
//! * rationals are always stored reduced, with a positive denominator;
//! * residues normalize with the Euclidean (never-negative) remainder, so
//!   negative inputs are accepted everywhere;
//! * an element of Q/Z is represented by its unique representative in
//!   `[0, 1)`.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Reduced arbitrary-precision rational with positive denominator.
///
/// The backing type maintains both invariants on every operation, and the
/// test suite re-checks exactness of field operations against
/// cross-multiplication on random 128-bit inputs.
pub type Rational = num_rational::BigRational;

/// Builds a reduced rational from machine integers.
///
/// Panics if `den == 0`; use only where the denominator is statically
/// nonzero.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `num/den`, denominator always explicit: `0/1`,
/// `3/5`, `-1/6`. This is the wire format used by the command-line tools.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// An integer residue normalized into `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    value: BigInt,
    modulus: BigInt,
}

impl Residue {
    /// Normalizes `value` into `[0, modulus)` by the Euclidean remainder.
    /// The modulus must be positive.
    pub fn new(value: impl Into<BigInt>, modulus: impl Into<BigInt>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigInt::one() {
            return Err(Error::InvalidModulus(modulus));
        }
        let value = value.into().mod_floor(&modulus);
        Ok(Residue { value, modulus })
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Iterative extended Euclid: returns `(g, s, t)` with `a·s + b·t = g` and
/// `g = gcd(a, b) ≥ 0`.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// The inverse of `a` modulo `p`, as a residue in `[1, p)`.
///
/// Requires `p ≥ 2` and `gcd(a, p) = 1`; `a` may be any integer and is
/// reduced first.
pub fn mod_inverse(a: impl Into<BigInt>, p: impl Into<BigInt>) -> Result<Residue> {
    let a = a.into();
    let p = p.into();
    if p < BigInt::from(2) {
        return Err(Error::InvalidModulus(p));
    }
    let reduced = a.mod_floor(&p);
    let (g, s, _) = extended_gcd(&reduced, &p);
    if !g.is_one() {
        return Err(Error::NotInvertible { a, m: p });
    }
    Residue::new(s, p)
}

/// The canonical representative of a rational in Q/Z: a reduced rational in
/// `[0, 1)`. Arithmetic wraps back into that interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QmodZ(Rational);

impl QmodZ {
    pub fn zero() -> Self {
        QmodZ(Rational::zero())
    }

    pub fn from_rational(r: &Rational) -> Self {
        QmodZ(r - r.floor())
    }

    /// The representative in `[0, 1)`.
    pub fn representative(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Multiplication by an integer scalar, wrapped back into `[0, 1)`.
    pub fn scale(&self, k: &BigInt) -> Self {
        QmodZ::from_rational(&(&self.0 * Rational::from(k.clone())))
    }
}

impl Add<&QmodZ> for &QmodZ {
    type Output = QmodZ;

    fn add(self, rhs: &QmodZ) -> QmodZ {
        QmodZ::from_rational(&(&self.0 + &rhs.0))
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

/// Projects a rational to its canonical Q/Z representative.
pub fn qmod_z(r: &Rational) -> QmodZ {
    QmodZ::from_rational(r)
}

/// Least common multiple of all entries. Fails on an empty list and on any
/// zero entry; the result is positive.
pub fn lcm_all<I>(xs: I) -> Result<BigInt>
where
    I: IntoIterator,
    I::Item: Into<BigInt>,
{
    let mut acc: Option<BigInt> = None;
    for (i, x) in xs.into_iter().enumerate() {
        let x = x.into();
        if x.is_zero() {
            return Err(Error::ZeroEntry(i));
        }
        acc = Some(match acc {
            None => x.abs(),
            Some(a) => a.lcm(&x),
        });
    }
    acc.ok_or(Error::EmptyInput)
}

/// Greatest common divisor of all entries, nonnegative. Zero entries are
/// allowed; an all-zero list has gcd 0.
pub fn gcd_all<I>(xs: I) -> Result<BigInt>
where
    I: IntoIterator,
    I::Item: Into<BigInt>,
{
    let mut acc: Option<BigInt> = None;
    for x in xs {
        let x = x.into();
        acc = Some(match acc {
            None => x.abs(),
            Some(a) => a.gcd(&x),
        });
    }
    acc.ok_or(Error::EmptyInput)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn mod_inverse_unit_examples() {
        assert_eq!(mod_inverse(1, 7).unwrap().value(), &int(1));
        let inv = mod_inverse(2, 5).unwrap();
        assert_eq!(inv.value(), &int(3));
        assert!((int(2) * inv.value()).mod_floor(&int(5)).is_one());
    }

    #[test]
    fn mod_inverse_rejects_non_units() {
        assert_eq!(
            mod_inverse(4, 6),
            Err(Error::NotInvertible {
                a: int(4),
                m: int(6)
            })
        );
        assert_eq!(
            mod_inverse(0, 5).unwrap_err(),
            Error::NotInvertible {
                a: int(0),
                m: int(5)
            }
        );
        assert_eq!(
            mod_inverse(3, 1).unwrap_err(),
            Error::InvalidModulus(int(1))
        );
    }

    #[test]
    fn mod_inverse_normalizes_negative_inputs() {
        let inv = mod_inverse(-3, 5).unwrap();
        assert_eq!(inv.value(), &int(3));
    }

    #[test]
    fn residue_normalization_is_euclidean() {
        assert_eq!(Residue::new(-1, 5).unwrap().value(), &int(4));
        assert_eq!(Residue::new(7, 5).unwrap().value(), &int(2));
        assert_eq!(Residue::new(0, 1).unwrap().value(), &int(0));
        assert!(Residue::new(3, 0).is_err());
    }

    #[test]
    fn qmod_z_examples() {
        assert_eq!(qmod_z(&rational(7, 5)), qmod_z(&rational(2, 5)));
        assert_eq!(qmod_z(&rational(-1, 3)).representative(), &rational(2, 3));
        assert!(qmod_z(&rational(3, 1)).is_zero());
        assert_eq!(qmod_z(&rational(3, 5)).to_string(), "3/5");
        assert_eq!(QmodZ::zero().to_string(), "0/1");
    }

    #[test]
    fn lcm_gcd_examples() {
        assert_eq!(lcm_all([2i64, 3, 5]).unwrap(), int(30));
        assert_eq!(lcm_all([-4i64, 6]).unwrap(), int(12));
        assert_eq!(gcd_all([4i64, 6, 10]).unwrap(), int(2));
        assert_eq!(gcd_all([0i64, 0]).unwrap(), int(0));
        assert_eq!(lcm_all(Vec::<i64>::new()).unwrap_err(), Error::EmptyInput);
        assert_eq!(lcm_all([2i64, 0]).unwrap_err(), Error::ZeroEntry(1));
    }

    proptest! {
        #[test]
        fn inverse_certificate(a in 1i64..10_000, p in 2i64..10_000) {
            prop_assume!(int(a).gcd(&int(p)).is_one());
            let inv = mod_inverse(a, p).unwrap();
            prop_assert!((int(a) * inv.value()).mod_floor(&int(p)).is_one());
            prop_assert!(inv.value() > &BigInt::zero() && inv.value() < &int(p));
        }

        #[test]
        fn rational_addition_is_exact(
            a in any::<i128>(), b in any::<i128>(), c in any::<i128>(), d in any::<i128>()
        ) {
            prop_assume!(b != 0 && d != 0);
            let lhs = Rational::new(BigInt::from(a), BigInt::from(b))
                + Rational::new(BigInt::from(c), BigInt::from(d));
            let rhs = Rational::new(
                BigInt::from(a) * BigInt::from(d) + BigInt::from(c) * BigInt::from(b),
                BigInt::from(b) * BigInt::from(d),
            );
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!(lhs.denom() > &BigInt::zero());
            prop_assert!(lhs.numer().gcd(lhs.denom()).is_one() || lhs.numer().is_zero());
        }

        #[test]
        fn qmod_z_kills_integer_shifts(n in -1000i64..1000, d in 1i64..1000, k in -50i64..50) {
            let r = rational(n, d);
            let shifted = &r + Rational::from(int(k));
            prop_assert_eq!(qmod_z(&r), qmod_z(&shifted));
            let rep = qmod_z(&r);
            prop_assert!(rep.representative() >= &Rational::zero());
            prop_assert!(rep.representative() < &Rational::one());
        }

        #[test]
        fn lcm_gcd_divisibility(xs in proptest::collection::vec(1i64..500, 1..8)) {
            let l = lcm_all(xs.clone()).unwrap();
            let g = gcd_all(xs.clone()).unwrap();
            for x in xs {
                prop_assert!(l.mod_floor(&int(x)).is_zero());
                prop_assert!(int(x).mod_floor(&g).is_zero());
            }
        }

        #[test]
        fn qmod_z_scale_matches_repeated_add(n in -300i64..300, d in 1i64..50, k in 0i64..40) {
            let q = qmod_z(&rational(n, d));
            let mut acc = QmodZ::zero();
            for _ in 0..k {
                acc = &acc + &q;
            }
            prop_assert_eq!(q.scale(&int(k)), acc);
        }
    }
}
