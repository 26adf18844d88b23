//! JSON front end for the pseudofree library.
//!
//! Every invocation reads one JSON document (except `lens`, which takes its
//! parameters from flags alone), runs one library operation, and writes one
//! JSON document to standard output. Exit codes are part of the contract:
//!
//! * 0: value computed, or the requested check passed
//! * 1: the requested check ran and reported failure
//! * 2: invalid input or a violated precondition
//!
//! Rationals are serialized as `"num/den"` strings. Local data is emitted
//! canonically (orbits sorted, weights reduced and sorted); when parsing
//! had to change the input to reach that form, the output carries
//! `"canonicalized": true`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use pseudofree::checks::{
    check_gcd_partner, check_liang, check_localization_sum, check_min_orbits,
    check_sphere_conjecture, check_symplectic_sum, check_weinstein, CheckReport, Stratum,
};
use pseudofree::exact::format_rational;
use pseudofree::models::{
    kawasaki_chern, kawasaki_ell, lens_local_data, projective_space_fixed_data, sphere_chern,
    sphere_local_data, suspend_fixed_points,
};
use pseudofree::numeric::sphere_chern_numeric;
use pseudofree::{
    euler_mod_z, qmod_z, quotient_by_cyclic, stabilize, Error, FixedPointData, LocalData, McConfig,
    RawOrbit, SphereAction,
};
use serde::{Deserialize, Serialize};

/// One parsed invocation: the subcommand and its scalar flags. Input data
/// arrives separately as raw bytes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Euler,
    Quotient {
        r: i64,
    },
    Stabilize,
    Sphere,
    Lens {
        p: i64,
        q: i64,
    },
    Kawasaki,
    Suspend {
        p: i64,
    },
    Cpn,
    Check {
        name: String,
    },
    VerifyMc {
        samples: u64,
        seed: u64,
        chunks: u64,
    },
}

impl Command {
    /// `lens` is built from flags alone; everything else consumes a document.
    pub fn reads_input(&self) -> bool {
        !matches!(self, Command::Lens { .. })
    }
}

/// The checks reachable through `check --name`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    MinOrbits,
    GcdPartner,
    Localization,
    Weinstein,
    SphereConjecture,
    Symplectic,
    Liang,
}

pub const CHECK_NAMES: [&str; 7] = [
    "min-orbits",
    "gcd-partner",
    "localization",
    "weinstein",
    "sphere-conjecture",
    "symplectic",
    "liang",
];

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min-orbits" => Ok(CheckName::MinOrbits),
            "gcd-partner" => Ok(CheckName::GcdPartner),
            "localization" => Ok(CheckName::Localization),
            "weinstein" => Ok(CheckName::Weinstein),
            "sphere-conjecture" => Ok(CheckName::SphereConjecture),
            "symplectic" => Ok(CheckName::Symplectic),
            "liang" => Ok(CheckName::Liang),
            other => Err(format!(
                "unknown check \"{other}\"; expected one of: {}",
                CHECK_NAMES.join(", ")
            )),
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        f.write_str(CHECK_NAMES[i])
    }
}

#[derive(Deserialize, Serialize)]
struct JsonOrbit {
    p: i64,
    q: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Deserialize, Serialize)]
struct JsonLocalData {
    n: usize,
    orbits: Vec<JsonOrbit>,
}

#[derive(Deserialize)]
struct JsonPoints {
    points: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct JsonWeights {
    weights: Vec<i64>,
}

#[derive(Deserialize)]
struct JsonParams {
    params: Vec<i64>,
}

#[derive(Deserialize)]
struct JsonStratum {
    area: i64,
    p: i64,
    q: Vec<i64>,
}

#[derive(Deserialize)]
struct JsonStrata {
    strata: Vec<JsonStratum>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize)]
struct EulerOut {
    e: String,
    #[serde(skip_serializing_if = "is_false")]
    canonicalized: bool,
}

#[derive(Serialize)]
struct DataOut {
    n: usize,
    orbits: Vec<JsonOrbit>,
    e: String,
    #[serde(skip_serializing_if = "is_false")]
    canonicalized: bool,
}

#[derive(Serialize)]
struct SphereOut {
    weights: Vec<i64>,
    chern: String,
    e: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbits: Option<Vec<JsonOrbit>>,
}

#[derive(Serialize)]
struct KawasakiOut {
    weights: Vec<i64>,
    ell: Vec<String>,
    chern: String,
}

#[derive(Serialize)]
struct PointsOut {
    points: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct CheckOut {
    check: String,
    passed: bool,
    lhs: String,
    rhs: String,
    witnesses: Vec<String>,
    #[serde(skip_serializing_if = "is_false")]
    canonicalized: bool,
}

#[derive(Serialize)]
struct McOut {
    weights: Vec<i64>,
    estimate: f64,
    stderr: f64,
    exact: String,
    sigmas: f64,
}

#[derive(Serialize)]
struct ErrorOut {
    error: String,
    violations: Vec<String>,
}

/// Anything that maps to exit code 2: malformed JSON, failed validation, or
/// a violated library precondition.
struct Failure {
    error: String,
    violations: Vec<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let violations = match &e {
            Error::InvalidLocalData(vs) => vs.iter().map(|v| v.to_string()).collect(),
            _ => Vec::new(),
        };
        Failure {
            error: e.to_string(),
            violations,
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            error: format!("invalid JSON: {e}"),
            violations: Vec::new(),
        }
    }
}

impl From<String> for Failure {
    fn from(error: String) -> Self {
        Failure {
            error,
            violations: Vec::new(),
        }
    }
}

/// Runs one command against one input document. Returns the exit code and
/// the JSON text to print (no trailing newline). Never panics on bad input;
/// every failure becomes exit 2 with an `{"error", "violations"}` document.
pub fn run(command: &Command, input: &[u8]) -> (i32, String) {
    match dispatch(command, input) {
        Ok(out) => out,
        Err(f) => (
            2,
            to_json(&ErrorOut {
                error: f.error,
                violations: f.violations,
            }),
        ),
    }
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("serialization of plain data cannot fail")
}

fn parse_local_data(input: &[u8]) -> Result<(LocalData, bool), Failure> {
    let doc: JsonLocalData = serde_json::from_slice(input)?;
    let raw: Vec<RawOrbit> = doc
        .orbits
        .into_iter()
        .map(|o| RawOrbit {
            p: o.p,
            q: o.q,
            label: o.label,
        })
        .collect();
    Ok(LocalData::from_raw(doc.n, &raw)?)
}

fn parse_weights(input: &[u8]) -> Result<Vec<i64>, Failure> {
    let doc: JsonWeights = serde_json::from_slice(input)?;
    Ok(doc.weights)
}

fn parse_points(input: &[u8]) -> Result<FixedPointData, Failure> {
    let doc: JsonPoints = serde_json::from_slice(input)?;
    let arity = doc.points.first().map_or(1, Vec::len);
    Ok(FixedPointData::new(arity, doc.points)?)
}

// Orders enter as i64 and every operation keeps weights inside [1, p-1],
// so the conversion back never truncates on reachable data.
fn small(v: &BigInt) -> Result<i64, Failure> {
    v.to_i64()
        .ok_or_else(|| Failure::from(format!("value {v} exceeds the 64-bit output range")))
}

fn orbits_out(data: &LocalData) -> Result<Vec<JsonOrbit>, Failure> {
    data.orbits()
        .iter()
        .map(|o| {
            Ok(JsonOrbit {
                p: small(o.order())?,
                q: o.weights().iter().map(small).collect::<Result<_, _>>()?,
                label: o.label().map(str::to_owned),
            })
        })
        .collect()
}

fn data_out(data: &LocalData, canonicalized: bool) -> Result<(i32, String), Failure> {
    let out = DataOut {
        n: data.arity(),
        orbits: orbits_out(data)?,
        e: euler_mod_z(data).to_string(),
        canonicalized,
    };
    Ok((0, to_json(&out)))
}

fn report_out(report: CheckReport, canonicalized: bool) -> (i32, String) {
    let code = if report.passed { 0 } else { 1 };
    let out = CheckOut {
        check: report.check_name,
        passed: report.passed,
        lhs: report.lhs,
        rhs: report.rhs,
        witnesses: report.witnesses,
        canonicalized,
    };
    (code, to_json(&out))
}

fn dispatch(command: &Command, input: &[u8]) -> Result<(i32, String), Failure> {
    match command {
        Command::Euler => {
            let (data, canonicalized) = parse_local_data(input)?;
            let out = EulerOut {
                e: euler_mod_z(&data).to_string(),
                canonicalized,
            };
            Ok((0, to_json(&out)))
        }
        Command::Quotient { r } => {
            let (data, canonicalized) = parse_local_data(input)?;
            data_out(&quotient_by_cyclic(&data, *r)?, canonicalized)
        }
        Command::Stabilize => {
            let (data, canonicalized) = parse_local_data(input)?;
            data_out(&stabilize(&data), canonicalized)
        }
        Command::Sphere => {
            let action = SphereAction::new(parse_weights(input)?)?;
            let chern = sphere_chern(&action);
            let local = if action.weights().len() >= 2 && action.is_pseudo_free() {
                Some(sphere_local_data(&action)?)
            } else {
                None
            };
            let out = SphereOut {
                weights: action.weights().to_vec(),
                chern: format_rational(&chern),
                e: qmod_z(&chern).to_string(),
                n: local.as_ref().map(LocalData::arity),
                orbits: local.as_ref().map(orbits_out).transpose()?,
            };
            Ok((0, to_json(&out)))
        }
        Command::Lens { p, q } => {
            let (data, predicted) = lens_local_data(*p, *q)?;
            let out = DataOut {
                n: data.arity(),
                orbits: orbits_out(&data)?,
                e: predicted.to_string(),
                canonicalized: false,
            };
            Ok((0, to_json(&out)))
        }
        Command::Kawasaki => {
            let weights = parse_weights(input)?;
            let chern = kawasaki_chern(&weights)?;
            let ell = (1..weights.len())
                .map(|k| kawasaki_ell(k, &weights).map(|l| l.to_string()))
                .collect::<Result<_, _>>()?;
            let out = KawasakiOut {
                weights,
                ell,
                chern: format_rational(&chern),
            };
            Ok((0, to_json(&out)))
        }
        Command::Suspend { p } => {
            let fixed = parse_points(input)?;
            data_out(&suspend_fixed_points(&fixed, *p)?, false)
        }
        Command::Cpn => {
            let doc: JsonParams = serde_json::from_slice(input)?;
            let fixed = projective_space_fixed_data(&doc.params)?;
            let out = PointsOut {
                points: fixed.points().to_vec(),
            };
            Ok((0, to_json(&out)))
        }
        Command::Check { name } => {
            let check: CheckName = name.parse().map_err(Failure::from)?;
            match check {
                CheckName::MinOrbits => {
                    let (data, canonicalized) = parse_local_data(input)?;
                    Ok(report_out(check_min_orbits(&data)?, canonicalized))
                }
                CheckName::GcdPartner => {
                    let (data, canonicalized) = parse_local_data(input)?;
                    Ok(report_out(check_gcd_partner(&data)?, canonicalized))
                }
                CheckName::Weinstein => {
                    let (data, canonicalized) = parse_local_data(input)?;
                    Ok(report_out(check_weinstein(&data), canonicalized))
                }
                CheckName::Liang => {
                    let (data, canonicalized) = parse_local_data(input)?;
                    Ok(report_out(check_liang(&data)?, canonicalized))
                }
                CheckName::Localization => {
                    let fixed = parse_points(input)?;
                    Ok(report_out(check_localization_sum(&fixed), false))
                }
                CheckName::SphereConjecture => {
                    let weights = parse_weights(input)?;
                    Ok(report_out(check_sphere_conjecture(&weights)?, false))
                }
                CheckName::Symplectic => {
                    let doc: JsonStrata = serde_json::from_slice(input)?;
                    let strata: Vec<Stratum> = doc
                        .strata
                        .into_iter()
                        .map(|s| Stratum {
                            area: s.area,
                            p: s.p,
                            q: s.q,
                        })
                        .collect();
                    Ok(report_out(check_symplectic_sum(&strata)?, false))
                }
            }
        }
        Command::VerifyMc {
            samples,
            seed,
            chunks,
        } => {
            let action = SphereAction::new(parse_weights(input)?)?;
            let cfg = McConfig::new(*samples, *seed, *chunks)?;
            let est = sphere_chern_numeric(&action, &cfg)?;
            let exact = sphere_chern(&action);
            let exact_f = exact
                .to_f64()
                .ok_or_else(|| Failure::from("exact value out of float range".to_string()))?;
            let sigmas = (est.estimate - exact_f).abs() / est.stderr;
            // 4 sigma: loose enough that a correct implementation passes for
            // any seed in practice, tight enough to catch a wrong constant.
            let code = if sigmas <= 4.0 { 0 } else { 1 };
            let out = McOut {
                weights: action.weights().to_vec(),
                estimate: est.estimate,
                stderr: est.stderr,
                exact: format_rational(&exact),
                sigmas,
            };
            Ok((code, to_json(&out)))
        }
    }
}
