//! Floating-point cross-checks of the exact sphere values.
//!
//! The exact kernel never touches floats; this module deliberately does,
//! re-deriving sphere Chern numbers from a volume integral: expand the top
//! wedge power of a constant 2-form exactly, estimate the unit-ball volume
//! by Monte Carlo rejection, and combine the two with the dimensional power
//! of π only at the very end.
//!
//! Randomness is counter-based and chunked: chunk i draws from an
//! independent ChaCha stream selected by i, hit counts are integers, and
//! chunks are reduced in index order, so every estimate is bit-reproducible
//! from (seed, samples, chunks).

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::models::SphereAction;

/// A translation-invariant 2-form `Σ_j c_j dx_j ∧ dy_j` on R^(2n), one
/// rational coefficient per coordinate plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantTwoForm {
    coefficients: Vec<Rational>,
}

impl ConstantTwoForm {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(ConstantTwoForm { coefficients })
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }
}

/// Coefficient of the volume form in the n-th wedge power of the form,
/// computed by expanding the power literally: one term per index tuple,
/// terms with a repeated plane dropped (their wedge vanishes), the rest
/// contributing the product of their coefficients. For distinct planes
/// this reproduces n!·∏c_j; the enumeration, not the closed form, is what
/// runs.
pub fn wedge_power_top(form: &ConstantTwoForm) -> Rational {
    fn expand(coeffs: &[Rational], used: &mut [bool], acc: &Rational, total: &mut Rational) {
        if used.iter().all(|&u| u) {
            *total += acc;
            return;
        }
        for j in 0..coeffs.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            let next = acc * &coeffs[j];
            expand(coeffs, used, &next, total);
            used[j] = false;
        }
    }
    let mut total = Rational::zero();
    let mut used = vec![false; form.coefficients.len()];
    expand(&form.coefficients, &mut used, &Rational::one(), &mut total);
    total
}

/// Sampling plan for a Monte Carlo estimate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    pub chunks: u64,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64, chunks: u64) -> Result<Self> {
        if samples == 0 {
            return Err(Error::NotPositive {
                what: "sample count",
                value: 0,
            });
        }
        if chunks == 0 {
            return Err(Error::NotPositive {
                what: "chunk count",
                value: 0,
            });
        }
        Ok(McConfig {
            samples,
            seed,
            chunks,
        })
    }
}

/// A Monte Carlo value with its one-sigma binomial standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

/// Volume of the unit ball in the given even dimension, by rejection
/// sampling of the enclosing cube `[-1, 1]^dim`.
pub fn mc_ball_volume(dim: usize, cfg: &McConfig) -> Result<McEstimate> {
    if dim == 0 || !dim.is_multiple_of(2) {
        return Err(Error::BadDimension(dim));
    }
    let base = cfg.samples / cfg.chunks;
    let remainder = cfg.samples % cfg.chunks;
    let mut hits: u64 = 0;
    for chunk in 0..cfg.chunks {
        let count = base + u64::from(chunk < remainder);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(chunk);
        for _ in 0..count {
            let mut norm2 = 0.0f64;
            for _ in 0..dim {
                let x = 2.0 * rng.random::<f64>() - 1.0;
                norm2 += x * x;
            }
            if norm2 <= 1.0 {
                hits += 1;
            }
        }
    }
    let n = cfg.samples as f64;
    let fraction = hits as f64 / n;
    let cube = 2.0f64.powi(dim as i32);
    Ok(McEstimate {
        estimate: cube * fraction,
        stderr: cube * (fraction * (1.0 - fraction) / n).sqrt(),
    })
}

/// Monte Carlo route to the sphere Chern number: the exact wedge
/// coefficient with `c_j = 1/p_j`, times `π^(-n)`, times the estimated
/// unit-ball volume in dimension 2n. Should reproduce `1/(p_1⋯p_n)` within
/// error bars.
pub fn sphere_chern_numeric(action: &SphereAction, cfg: &McConfig) -> Result<McEstimate> {
    let n = action.weights().len();
    let coefficients = action
        .weights()
        .iter()
        .map(|&p| Rational::new(BigInt::one(), BigInt::from(p)))
        .collect();
    let wedge = wedge_power_top(&ConstantTwoForm::new(coefficients)?);
    let wedge_f64 = wedge.to_f64().expect("wedge coefficient is finite");
    let factor = wedge_f64 * std::f64::consts::PI.powi(-(n as i32));
    let ball = mc_ball_volume(2 * n, cfg)?;
    Ok(McEstimate {
        estimate: factor * ball.estimate,
        stderr: factor.abs() * ball.stderr,
    })
}
