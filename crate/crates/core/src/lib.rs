//! Exact invariants of pseudo-free circle actions.
//!
//! A pseudo-free circle action on a closed oriented odd-dimensional manifold
//! is described, for the purposes of this crate, by its *local data*: the
//! finite list of exceptional orbits, each carrying the order `p` of its
//! isotropy group and the slice weights `q_1, ..., q_n` (units mod `p`).
//! The central quantity is the Chern number of the quotient, an element of
//! Q/Z computed exactly:
//!
//! ```text
//! e = Σ_C  (q_1(C)^-1 · ... · q_n(C)^-1 mod p(C)) / p(C)     (mod Z)
//! ```
//!
//! The crate provides:
//!
//! * [`exact`]: arbitrary-precision rational and modular arithmetic,
//!   including the canonical Q/Z representative used everywhere else.
//! * [`local_data`]: the orbit-data calculus, built on the Chern-number sum,
//!   stabilization, cyclic quotients, and the underlying weight
//!   transformation rules.
//! * [`models`]: closed-form model actions (weighted spheres, lens spaces,
//!   orbifold quotients, suspensions of fixed-point data) used as oracles.
//! * [`checks`]: independent verdicts on corollary-level constraints that
//!   valid local data must satisfy.
//! * [`numeric`]: a floating-point Monte Carlo cross-check of the exact
//!   sphere values, kept deliberately separate from the exact kernel.
//!
//! All exact computation is on `BigInt`/`BigRational`; `i64` appears only as
//! an ingestion bound at the API boundary, so no arithmetic step can
//! silently overflow.

pub mod checks;
mod error;
pub mod exact;
pub mod local_data;
pub mod models;
pub mod numeric;

pub use checks::{CheckReport, Stratum};
pub use error::{Error, Result};
pub use exact::{gcd_all, lcm_all, mod_inverse, qmod_z, QmodZ, Rational, Residue};
pub use local_data::{
    euler_mod_z, quotient_by_cyclic, stabilize, validate, ExceptionalOrbit, LocalData, RawOrbit,
    Violation,
};
pub use models::{FixedPointData, SphereAction};
pub use numeric::{ConstantTwoForm, McConfig, McEstimate};
