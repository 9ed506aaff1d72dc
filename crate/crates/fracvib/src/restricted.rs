//! Restricted effective damping ratio, natural frequencies, and frequency
//! ratio.
//!
//! "Restricted" means the quantities are only defined under engineering
//! restrictions: m_eff(ω) > 0 for all of them, and additionally
//! |ζ_eff| ≤ 1 for the damped natural frequency. With m_eff, c_eff, k_eff
//! from [`crate::effective`]:
//!
//! ```text
//! ζ_eff  = c_eff / (2 √(m_eff k_eff))       m_eff > 0
//! ω_effn = √(k_eff / m_eff)                 m_eff > 0
//! ω_effd = ω_effn √(1 − ζ_eff²)             |ζ_eff| ≤ 1
//! γ_eff  = ω / ω_effn                       m_eff > 0
//! ```
//!
//! Negative ζ_eff is a legal output (self-vibrating regime); only
//! |ζ_eff| ≤ 1 gates ω_effd, and |ζ_eff| = 1 exactly is accepted with
//! ω_effd = 0. Violations surface as typed results — a status in the
//! report-style [`RestrictedParams`], or an [`Error`] from the narrow
//! accessors — never as NaN.

use serde::Serialize;

use crate::effective::{effective_params, EffectiveParams};
use crate::error::{check_frequency, Error};
use crate::model::VibratorSpec;

/// Whether the restrictions hold at a frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RestrictionStatus {
    Ok,
    MassNonPositive,
    OverCritical,
}

impl std::fmt::Display for RestrictionStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RestrictionStatus::Ok => "OK",
            RestrictionStatus::MassNonPositive => "MassNonPositive",
            RestrictionStatus::OverCritical => "OverCritical",
        })
    }
}

/// The four restricted quantities at one frequency, with fields populated
/// only as far as the restrictions allow: nothing when the effective mass is
/// not positive, everything but `omega_effd` when over-critically damped.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RestrictedParams {
    pub omega: f64,
    pub status: RestrictionStatus,
    pub zeta_eff: Option<f64>,
    pub omega_effn: Option<f64>,
    pub omega_effd: Option<f64>,
    pub gamma_eff: Option<f64>,
}

/// Evaluate the restricted quantities at `omega`, reporting restriction
/// failures through the status field.
pub fn restricted_params(spec: &VibratorSpec, omega: f64) -> Result<RestrictedParams, Error> {
    let ep = effective_params(spec, omega)?;
    from_effective(&ep)
}

pub(crate) fn from_effective(ep: &EffectiveParams) -> Result<RestrictedParams, Error> {
    let omega = ep.omega;
    if ep.mass <= 0.0 {
        return Ok(RestrictedParams {
            omega,
            status: RestrictionStatus::MassNonPositive,
            zeta_eff: None,
            omega_effn: None,
            omega_effd: None,
            gamma_eff: None,
        });
    }
    // k_eff > 0 whenever λ ∈ [0, 1) and ω > 0; a zero can only come from a
    // degenerate profile or underflow and is a hard error, not ζ_eff = ∞.
    if ep.stiffness <= 0.0 {
        return Err(Error::StiffnessZero { omega });
    }
    let zeta = ep.damping / (2.0 * (ep.mass * ep.stiffness).sqrt());
    let omega_n = (ep.stiffness / ep.mass).sqrt();
    let gamma = omega / omega_n;
    let omega_d = if zeta.abs() <= 1.0 {
        Some(omega_n * (1.0 - zeta * zeta).sqrt())
    } else {
        None
    };
    Ok(RestrictedParams {
        omega,
        status: if omega_d.is_some() {
            RestrictionStatus::Ok
        } else {
            RestrictionStatus::OverCritical
        },
        zeta_eff: Some(zeta),
        omega_effn: Some(omega_n),
        omega_effd: omega_d,
        gamma_eff: Some(gamma),
    })
}

fn mass_error(spec: &VibratorSpec, omega: f64) -> Error {
    let m_eff = effective_params(spec, omega)
        .map(|p| p.mass)
        .unwrap_or(f64::NAN);
    Error::MassNonPositive { m_eff, omega }
}

/// ζ_eff(ω) = c_eff / (2√(m_eff k_eff)); requires m_eff > 0.
pub fn damping_ratio(spec: &VibratorSpec, omega: f64) -> Result<f64, Error> {
    let rp = restricted_params(spec, omega)?;
    rp.zeta_eff.ok_or_else(|| mass_error(spec, omega))
}

/// ω_effn(ω) = √(k_eff / m_eff); requires m_eff > 0.
pub fn natural_frequency(spec: &VibratorSpec, omega: f64) -> Result<f64, Error> {
    let rp = restricted_params(spec, omega)?;
    rp.omega_effn.ok_or_else(|| mass_error(spec, omega))
}

/// ω_effd(ω) = ω_effn √(1 − ζ_eff²); requires m_eff > 0 and |ζ_eff| ≤ 1.
pub fn damped_frequency(spec: &VibratorSpec, omega: f64) -> Result<f64, Error> {
    let rp = restricted_params(spec, omega)?;
    match rp.status {
        RestrictionStatus::Ok => Ok(rp.omega_effd.expect("status OK implies omega_effd")),
        RestrictionStatus::MassNonPositive => Err(mass_error(spec, omega)),
        RestrictionStatus::OverCritical => Err(Error::OverCritical {
            zeta_eff: rp.zeta_eff.expect("over-critical implies zeta"),
            omega,
        }),
    }
}

/// γ_eff(ω) = ω / ω_effn; requires m_eff > 0.
pub fn frequency_ratio(spec: &VibratorSpec, omega: f64) -> Result<f64, Error> {
    let rp = restricted_params(spec, omega)?;
    rp.gamma_eff.ok_or_else(|| mass_error(spec, omega))
}

/// The classical quantities of the primary coefficients, used by the
/// classical-reduction checks: ζ = c/(2√(mk)), ω_n = √(k/m),
/// ω_d = ω_n√(1−ζ²) (when ζ ≤ 1), γ = ω/ω_n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalParams {
    pub zeta: f64,
    pub omega_n: f64,
    pub omega_d: Option<f64>,
    pub gamma: f64,
}

pub fn classical_params(spec: &VibratorSpec, omega: f64) -> Result<ClassicalParams, Error> {
    check_frequency(omega)?;
    let zeta = spec.c() / (2.0 * (spec.m() * spec.k()).sqrt());
    let omega_n = (spec.k() / spec.m()).sqrt();
    let omega_d = (zeta.abs() <= 1.0).then(|| omega_n * (1.0 - zeta * zeta).sqrt());
    Ok(ClassicalParams {
        zeta,
        omega_n,
        omega_d,
        gamma: omega / omega_n,
    })
}
