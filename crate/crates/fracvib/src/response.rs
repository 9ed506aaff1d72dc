//! Restricted free response, impulse response, and frequency transfer
//! function of the equivalent representation.
//!
//! Responses live in the time–frequency plane x(t, ω): the effective
//! parameters are frozen at the chosen evaluation frequency ω, then the
//! equivalent second-order equation is solved in closed form. With
//! ζ = ζ_eff(ω), ωn = ω_effn(ω), ωd = ω_effd(ω), m = m_eff(ω):
//!
//! ```text
//! x(t) = e^{−ζωn t} (x0 cos(ωd t) + (v0 + ζωn x0)/ωd · sin(ωd t))
//! h(t) = e^{−ζωn t} sin(ωd t) / (m ωd)
//! H(ω) = 1 / (k_eff (1 − γ_eff² + i 2 ζ_eff γ_eff))
//! ```
//!
//! Both time responses require m_eff > 0 and |ζ_eff| ≤ 1; the transfer
//! function requires only m_eff > 0. When ωd falls below 1e−9·ωn the
//! critically damped limit forms are used instead, avoiding catastrophic
//! cancellation in sin(ωd t)/ωd.
//!
//! Negative ζ_eff with status OK produces a growing envelope
//! (self-vibration); that is a legitimate regime, not an error.

use num_complex::Complex64;
use serde::Serialize;

use crate::effective::effective_params;
use crate::error::Error;
use crate::model::VibratorSpec;
use crate::restricted::{from_effective, RestrictionStatus};

/// Initial displacement and velocity for the free response.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InitialConditions {
    pub x0: f64,
    pub v0: f64,
}

/// Samples of a time response at a fixed evaluation frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    /// The time–frequency plane parameter the coefficients were frozen at.
    pub omega: f64,
    pub samples: Vec<(f64, f64)>,
}

/// One point of the frequency transfer function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyResponsePoint {
    pub omega: f64,
    pub h: Complex64,
    /// |H(ω)|.
    pub amplitude: f64,
    /// Two-argument arctangent of (2 ζ_eff γ_eff, 1 − γ_eff²), in (−π, π].
    /// For ζ_eff ≥ 0 this coincides with the arccos phase form on [0, π];
    /// the signed convention extends it to negative-damping cases.
    pub phase: f64,
}

/// Relative width of the critical-damping switchover band.
const CRITICAL_BAND: f64 = 1e-9;

struct ResponseCoeffs {
    zeta: f64,
    omega_n: f64,
    omega_d: f64,
    mass: f64,
}

fn response_coeffs(spec: &VibratorSpec, omega: f64) -> Result<ResponseCoeffs, Error> {
    let ep = effective_params(spec, omega)?;
    let rp = from_effective(&ep)?;
    match rp.status {
        RestrictionStatus::Ok => Ok(ResponseCoeffs {
            zeta: rp.zeta_eff.expect("status OK"),
            omega_n: rp.omega_effn.expect("status OK"),
            omega_d: rp.omega_effd.expect("status OK"),
            mass: ep.mass,
        }),
        RestrictionStatus::MassNonPositive => Err(Error::MassNonPositive {
            m_eff: ep.mass,
            omega,
        }),
        RestrictionStatus::OverCritical => Err(Error::OverCritical {
            zeta_eff: rp.zeta_eff.expect("over-critical"),
            omega,
        }),
    }
}

fn check_time_grid(t_grid: &[f64]) {
    assert!(
        t_grid.windows(2).all(|p| p[0] < p[1]),
        "time grid must be strictly increasing"
    );
    assert!(
        t_grid.first().is_none_or(|t| *t >= 0.0 && t.is_finite()),
        "time grid must start at t >= 0"
    );
}

/// Closed-form free response evaluator at frequency `omega`.
///
/// The returned closure may be evaluated at any t (the finite-difference
/// oracle probes slightly negative t near 0); [`free_response`] restricts
/// sampling to t ≥ 0.
pub fn free_response_fn(
    spec: &VibratorSpec,
    omega: f64,
    ic: InitialConditions,
) -> Result<impl Fn(f64) -> f64, Error> {
    assert!(
        ic.x0.is_finite() && ic.v0.is_finite(),
        "initial conditions must be finite"
    );
    let rc = response_coeffs(spec, omega)?;
    let decay = rc.zeta * rc.omega_n;
    let critical = rc.omega_d < CRITICAL_BAND * rc.omega_n;
    let slope = ic.v0 + decay * ic.x0;
    let (x0, wd) = (ic.x0, rc.omega_d);
    Ok(move |t: f64| {
        let env = (-decay * t).exp();
        if critical {
            env * (x0 + slope * t)
        } else {
            env * (x0 * (wd * t).cos() + slope / wd * (wd * t).sin())
        }
    })
}

/// Free response x(t) sampled on `t_grid` (strictly increasing, t ≥ 0).
pub fn free_response(
    spec: &VibratorSpec,
    omega: f64,
    ic: InitialConditions,
    t_grid: &[f64],
) -> Result<TimeSeries, Error> {
    check_time_grid(t_grid);
    let x = free_response_fn(spec, omega, ic)?;
    Ok(TimeSeries {
        omega,
        samples: t_grid.iter().map(|&t| (t, x(t))).collect(),
    })
}

/// Closed-form impulse response evaluator at frequency `omega`.
pub fn impulse_response_fn(spec: &VibratorSpec, omega: f64) -> Result<impl Fn(f64) -> f64, Error> {
    let rc = response_coeffs(spec, omega)?;
    let decay = rc.zeta * rc.omega_n;
    let critical = rc.omega_d < CRITICAL_BAND * rc.omega_n;
    let (mass, wd) = (rc.mass, rc.omega_d);
    Ok(move |t: f64| {
        let env = (-decay * t).exp();
        if critical {
            t * env / mass
        } else {
            env * (wd * t).sin() / (mass * wd)
        }
    })
}

/// Impulse response h(t) sampled on `t_grid`.
pub fn impulse_response(
    spec: &VibratorSpec,
    omega: f64,
    t_grid: &[f64],
) -> Result<TimeSeries, Error> {
    check_time_grid(t_grid);
    let h = impulse_response_fn(spec, omega)?;
    Ok(TimeSeries {
        omega,
        samples: t_grid.iter().map(|&t| (t, h(t))).collect(),
    })
}

/// Frequency transfer function H(ω) = 1/(k_eff(1 − γ_eff² + i 2ζ_eff γ_eff)).
///
/// Defined wherever m_eff(ω) > 0 (over-critical damping does not gate H).
/// Equals 1/D(ω) with D the spectral polynomial; `verify` exercises that
/// equivalence.
pub fn transfer_function(spec: &VibratorSpec, omega: f64) -> Result<FrequencyResponsePoint, Error> {
    let ep = effective_params(spec, omega)?;
    if ep.mass <= 0.0 {
        return Err(Error::MassNonPositive {
            m_eff: ep.mass,
            omega,
        });
    }
    if ep.stiffness <= 0.0 {
        return Err(Error::StiffnessZero { omega });
    }
    let zeta = ep.damping / (2.0 * (ep.mass * ep.stiffness).sqrt());
    let omega_n = (ep.stiffness / ep.mass).sqrt();
    let gamma = omega / omega_n;
    let in_phase = 1.0 - gamma * gamma;
    let quadrature = 2.0 * zeta * gamma;
    let denom = Complex64::new(ep.stiffness * in_phase, ep.stiffness * quadrature);
    if denom.norm() < 1e-300 {
        return Err(Error::ResonanceSingular { omega });
    }
    let h = Complex64::new(1.0, 0.0) / denom;
    Ok(FrequencyResponsePoint {
        omega,
        h,
        amplitude: h.norm(),
        phase: quadrature.atan2(in_phase),
    })
}
