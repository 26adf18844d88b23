//! Independent verdicts on constraints that valid local data must satisfy.
//!
//! Each checker evaluates one corollary-level consequence of the
//! Chern-number formula on concrete data and reports observed versus
//! required values. Checkers whose constraint only binds when the Chern
//! number vanishes refuse data with e ≠ 0 (`Error::NotApplicable`) instead
//! of guessing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rational, lcm_all, qmod_z, QmodZ, Rational};
use crate::local_data::{euler_mod_z, ExceptionalOrbit, LocalData};
use crate::models::{
    liang_prediction, sphere_chern, sphere_singular_dim, FixedPointData, SphereAction,
};

/// Outcome of one check: the observed value, the required value, and the
/// minimal set of orbits or points that witness a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_name: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
    pub witnesses: Vec<String>,
}

impl CheckReport {
    fn new(name: &str, passed: bool, lhs: String, rhs: String, witnesses: Vec<String>) -> Self {
        CheckReport {
            check_name: name.to_string(),
            passed,
            lhs,
            rhs,
            witnesses,
        }
    }
}

fn orbit_name(index: usize, orbit: &ExceptionalOrbit) -> String {
    orbit
        .label()
        .map(str::to_string)
        .unwrap_or_else(|| format!("orbit {index}"))
}

fn require_zero_euler(data: &LocalData) -> Result<QmodZ> {
    let e = euler_mod_z(data);
    if e.is_zero() {
        Ok(e)
    } else {
        Err(Error::NotApplicable(e))
    }
}

/// With e = 0, a nonempty exceptional set has at least two orbits, and
/// exactly two forces equal isotropy orders.
pub fn check_min_orbits(data: &LocalData) -> Result<CheckReport> {
    require_zero_euler(data)?;
    let orbits = data.orbits();
    let report = match orbits {
        [] => CheckReport::new(
            "min-orbits",
            true,
            "0 exceptional orbits".into(),
            "0 or at least 2 exceptional orbits".into(),
            vec![],
        ),
        [only] => CheckReport::new(
            "min-orbits",
            false,
            "1 exceptional orbit".into(),
            "0 or at least 2 exceptional orbits".into(),
            vec![orbit_name(0, only)],
        ),
        [a, b] => {
            let equal = a.order() == b.order();
            let witnesses = if equal {
                vec![]
            } else {
                vec![orbit_name(0, a), orbit_name(1, b)]
            };
            CheckReport::new(
                "min-orbits",
                equal,
                format!("2 orbits with orders {}, {}", a.order(), b.order()),
                "2 orbits with equal orders".into(),
                witnesses,
            )
        }
        _ => CheckReport::new(
            "min-orbits",
            true,
            format!("{} exceptional orbits", orbits.len()),
            "0 or at least 2 exceptional orbits".into(),
            vec![],
        ),
    };
    Ok(report)
}

/// With e = 0, every exceptional orbit shares a nontrivial isotropy divisor
/// with some other orbit.
pub fn check_gcd_partner(data: &LocalData) -> Result<CheckReport> {
    require_zero_euler(data)?;
    let orbits = data.orbits();
    let mut witnesses = Vec::new();
    for (i, orbit) in orbits.iter().enumerate() {
        let has_partner = orbits
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && !orbit.order().gcd(other.order()).is_one());
        if !has_partner {
            witnesses.push(orbit_name(i, orbit));
        }
    }
    let passed = witnesses.is_empty();
    Ok(CheckReport::new(
        "gcd-partner",
        passed,
        format!("{} orbits without a coprime partner", witnesses.len()),
        "0 orbits without a coprime partner".into(),
        witnesses,
    ))
}

/// Localization identity for isolated fixed points: the signed sum of
/// reciprocal weight products vanishes exactly.
pub fn check_localization_sum(fixed: &FixedPointData) -> CheckReport {
    let mut sum = Rational::new(BigInt::from(0), BigInt::one());
    for point in fixed.points() {
        let prod = point
            .iter()
            .fold(BigInt::one(), |acc, &q| acc * BigInt::from(q));
        sum += Rational::new(BigInt::one(), prod);
    }
    CheckReport::new(
        "localization",
        sum.numer().is_zero(),
        format_rational(&sum),
        "0/1".into(),
        vec![],
    )
}

/// Integrality of the Chern number against the least common multiple of the
/// isotropy orders: ℓ·e must vanish in Q/Z (ℓ = 1 for a free action).
pub fn check_weinstein(data: &LocalData) -> CheckReport {
    let e = euler_mod_z(data);
    let ell = if data.orbits().is_empty() {
        BigInt::one()
    } else {
        lcm_all(data.orbits().iter().map(|o| o.order().clone()))
            .expect("orbit orders are at least 2")
    };
    let value = e.scale(&ell);
    CheckReport::new(
        "weinstein",
        value.is_zero(),
        value.to_string(),
        "0/1".into(),
        vec![],
    )
}

/// Integrality bound tied to the singular stratum of a linear sphere
/// quotient: with ℓ the lcm of the weights and k the singular dimension,
/// ℓ^(k+1)·|1/∏p_i| must be an integer (exponent 0 for a free action).
pub fn check_sphere_conjecture(weights: &[i64]) -> Result<CheckReport> {
    let action = SphereAction::new(weights.to_vec())?;
    let k = sphere_singular_dim(weights)?;
    let ell = lcm_all(weights.iter().copied())?;
    let chern_abs = sphere_chern(&action).abs();
    let exponent = (k + 1) as u32;
    let scaled = chern_abs * Rational::from(ell.pow(exponent));
    let value = qmod_z(&scaled);
    Ok(CheckReport::new(
        "sphere-conjecture",
        value.is_zero(),
        value.to_string(),
        "0/1".into(),
        vec![],
    ))
}

/// One fixed stratum of a symplectic quotient sum: a count of orbits
/// (its symplectic area), an isotropy order, and slice weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub area: i64,
    pub p: i64,
    pub q: Vec<i64>,
}

/// Weighted vanishing of the orbit sum over strata:
/// Σ area·(q_1^-1⋯q_n^-1 mod p)/p ≡ 0 in Q/Z.
pub fn check_symplectic_sum(strata: &[Stratum]) -> Result<CheckReport> {
    let mut value = QmodZ::zero();
    let mut arity: Option<usize> = None;
    for (index, stratum) in strata.iter().enumerate() {
        if stratum.area < 1 {
            return Err(Error::InvalidStratum {
                index,
                reason: format!("area {} is not positive", stratum.area),
            });
        }
        match arity {
            None => arity = Some(stratum.q.len()),
            Some(n) if n != stratum.q.len() => {
                return Err(Error::InvalidStratum {
                    index,
                    reason: format!("expected {} weights, got {}", n, stratum.q.len()),
                });
            }
            _ => {}
        }
        let orbit = ExceptionalOrbit::new(stratum.p, stratum.q.iter().copied()).map_err(|e| {
            Error::InvalidStratum {
                index,
                reason: e.to_string(),
            }
        })?;
        value = &value + &orbit.contribution().scale(&BigInt::from(stratum.area));
    }
    Ok(CheckReport::new(
        "symplectic",
        value.is_zero(),
        value.to_string(),
        "0/1".into(),
        vec![],
    ))
}

/// Sphere-value constraint for pairwise-coprime isotropy orders: the Chern
/// number must be one of ±1/(product of orders). An empty exceptional set
/// predicts 0.
pub fn check_liang(data: &LocalData) -> Result<CheckReport> {
    let orders: Vec<i64> = data
        .orbits()
        .iter()
        .map(|o| o.order().to_i64().expect("orders are ingestion-bounded"))
        .collect();
    let (plus, minus) = liang_prediction(&orders)?;
    let e = euler_mod_z(data);
    let passed = e == plus || e == minus;
    let rhs = if plus == minus {
        plus.to_string()
    } else {
        format!("{plus} or {minus}")
    };
    Ok(CheckReport::new(
        "liang",
        passed,
        e.to_string(),
        rhs,
        vec![],
    ))
}
