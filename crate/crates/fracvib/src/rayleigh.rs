//! Generalized Rayleigh damping decomposition.
//!
//! For a vibrator with zero primary damping the effective damping splits
//! into a mass-proportional and a stiffness-proportional part,
//!
//! ```text
//! a(ω) = ω^{α(ω)−1} sin(α(ω)π/2)
//! b(ω) = ω^{λ(ω)−1} sin(λ(ω)π/2)
//! c_gray(ω) = a(ω)·m + b(ω)·k
//! ```
//!
//! which is the Rayleigh damping form c = a·m + b·k with frequency-dependent
//! coefficients. `c_gray` equals the effective damping of the same spec, and
//! with constant orders it is the standard Rayleigh damping with a specific
//! (a, b) pair. a(ω) ≥ 0 whenever 1 < α(ω) < 2 and can go negative for
//! 2 < α(ω) < 3; b(ω) ≥ 0 always since 0 ≤ λ(ω) < 1.
//!
//! The operation requires c = 0 structurally rather than silently ignoring
//! a nonzero primary damping.

use serde::Serialize;

use crate::effective::{power_term, sin_half_pi};
use crate::error::Error;
use crate::model::VibratorSpec;

/// The decomposition at one frequency. `c_gray` is assembled as
/// `a*m + b*k`, so the identity holds bit-exactly by construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RayleighDecomposition {
    pub omega: f64,
    pub a: f64,
    pub b: f64,
    pub c_gray: f64,
}

/// Compute a(ω), b(ω), and c_gray for a spec with zero primary damping.
pub fn rayleigh_coefficients(
    spec: &VibratorSpec,
    omega: f64,
) -> Result<RayleighDecomposition, Error> {
    if spec.c() != 0.0 {
        return Err(Error::NonzeroPrimaryDamping { c: spec.c() });
    }
    let ov = spec.orders_at(omega)?;
    let a = power_term(1.0, omega, ov.alpha - 1.0, sin_half_pi(ov.alpha));
    let b = power_term(1.0, omega, ov.lambda - 1.0, sin_half_pi(ov.lambda));
    Ok(RayleighDecomposition {
        omega,
        a,
        b,
        c_gray: a * spec.m() + b * spec.k(),
    })
}
