//! Class-specific closed forms for vibrator classes I–V, written directly
//! from each class's own motion equation rather than through the general
//! class-VI pipeline.
//!
//! These are deliberately redundant: production code evaluates everything
//! through the canonical form, and [`super::check_class_reduction`] compares
//! that path against these per-class expressions. The class content lives in
//! which symbols appear — classes I–III keep the primary stiffness k as the
//! restoring coefficient, class V keeps the primary mass m as the inertia
//! coefficient.

use num_complex::Complex64;

use crate::effective::{cos_half_pi, power_term, sin_half_pi, EffectiveParams};
use crate::error::Error;
use crate::model::{VibratorClass, VibratorSpec};
use crate::response::InitialConditions;
use crate::restricted::{RestrictedParams, RestrictionStatus};

fn class_orders(spec: &VibratorSpec, omega: f64) -> Result<(f64, f64, f64), Error> {
    let ov = spec.orders_at(omega)?;
    Ok((ov.alpha, ov.beta, ov.lambda))
}

/// Effective mass, damping, and stiffness from the class-specific formulas.
/// Panics on class VI, which has no reduced form.
pub fn effective(spec: &VibratorSpec, omega: f64) -> Result<EffectiveParams, Error> {
    let (m, c, k) = (spec.m(), spec.c(), spec.k());
    let (a, b, l) = class_orders(spec, omega)?;
    let w = omega;
    let (mass, damping, stiffness) = match spec.class() {
        VibratorClass::I => (
            -(m * w.powf(a - 2.0) * cos_half_pi(a)),
            m * w.powf(a - 1.0) * sin_half_pi(a),
            k,
        ),
        VibratorClass::II => (
            m - c * w.powf(b - 2.0) * cos_half_pi(b),
            c * w.powf(b - 1.0) * sin_half_pi(b),
            k,
        ),
        VibratorClass::III => (
            -(m * w.powf(a - 2.0) * cos_half_pi(a) + c * w.powf(b - 2.0) * cos_half_pi(b)),
            m * w.powf(a - 1.0) * sin_half_pi(a) + c * w.powf(b - 1.0) * sin_half_pi(b),
            k,
        ),
        VibratorClass::IV => (
            -(m * w.powf(a - 2.0) * cos_half_pi(a)),
            m * w.powf(a - 1.0) * sin_half_pi(a) + power_term(k, w, l - 1.0, sin_half_pi(l)),
            k * w.powf(l) * cos_half_pi(l),
        ),
        VibratorClass::V => (
            m,
            power_term(k, w, l - 1.0, sin_half_pi(l)),
            k * w.powf(l) * cos_half_pi(l),
        ),
        VibratorClass::VI => panic!("class VI has no reduced form"),
    };
    Ok(EffectiveParams {
        omega,
        mass,
        damping,
        stiffness,
    })
}

/// Restricted quantities from the class-specific damping-ratio and
/// natural-frequency expressions.
pub fn restricted(spec: &VibratorSpec, omega: f64) -> Result<RestrictedParams, Error> {
    let ep = effective(spec, omega)?;
    let (m, k) = (spec.m(), spec.k());
    let none = |status| RestrictedParams {
        omega,
        status,
        zeta_eff: None,
        omega_effn: None,
        omega_effd: None,
        gamma_eff: None,
    };
    if ep.mass <= 0.0 {
        return Ok(none(RestrictionStatus::MassNonPositive));
    }
    if ep.stiffness <= 0.0 {
        return Err(Error::StiffnessZero { omega });
    }
    let (zeta, omega_n) = match spec.class() {
        // classes I-III restore with the primary stiffness
        VibratorClass::I | VibratorClass::II | VibratorClass::III => (
            ep.damping / (2.0 * (ep.mass * k).sqrt()),
            (k / ep.mass).sqrt(),
        ),
        VibratorClass::IV => (
            ep.damping / (2.0 * (ep.mass * ep.stiffness).sqrt()),
            (ep.stiffness / ep.mass).sqrt(),
        ),
        // class V keeps the primary mass as the inertia coefficient
        VibratorClass::V => (
            ep.damping / (2.0 * (m * ep.stiffness).sqrt()),
            (ep.stiffness / m).sqrt(),
        ),
        VibratorClass::VI => unreachable!("effective() rejects class VI"),
    };
    let gamma = omega / omega_n;
    if zeta.abs() > 1.0 {
        return Ok(RestrictedParams {
            omega,
            status: RestrictionStatus::OverCritical,
            zeta_eff: Some(zeta),
            omega_effn: Some(omega_n),
            omega_effd: None,
            gamma_eff: Some(gamma),
        });
    }
    Ok(RestrictedParams {
        omega,
        status: RestrictionStatus::Ok,
        zeta_eff: Some(zeta),
        omega_effn: Some(omega_n),
        omega_effd: Some(omega_n * (1.0 - zeta * zeta).sqrt()),
        gamma_eff: Some(gamma),
    })
}

fn underdamped(spec: &VibratorSpec, omega: f64) -> Result<(f64, f64, f64, f64), Error> {
    let ep = effective(spec, omega)?;
    let rp = restricted(spec, omega)?;
    match rp.status {
        RestrictionStatus::Ok => Ok((
            rp.zeta_eff.unwrap(),
            rp.omega_effn.unwrap(),
            rp.omega_effd.unwrap(),
            ep.mass,
        )),
        RestrictionStatus::MassNonPositive => Err(Error::MassNonPositive {
            m_eff: ep.mass,
            omega,
        }),
        RestrictionStatus::OverCritical => Err(Error::OverCritical {
            zeta_eff: rp.zeta_eff.unwrap(),
            omega,
        }),
    }
}

/// Free response of the reduced class at time t.
pub fn free_response_at(
    spec: &VibratorSpec,
    omega: f64,
    ic: InitialConditions,
    t: f64,
) -> Result<f64, Error> {
    let (zeta, wn, wd, _) = underdamped(spec, omega)?;
    let env = (-zeta * wn * t).exp();
    let slope = ic.v0 + zeta * wn * ic.x0;
    if wd < 1e-9 * wn {
        Ok(env * (ic.x0 + slope * t))
    } else {
        Ok(env * (ic.x0 * (wd * t).cos() + slope / wd * (wd * t).sin()))
    }
}

/// Impulse response of the reduced class at time t. The inertia divisor is
/// the class-specific effective mass (the primary m for class V).
pub fn impulse_response_at(spec: &VibratorSpec, omega: f64, t: f64) -> Result<f64, Error> {
    let (zeta, wn, wd, mass) = underdamped(spec, omega)?;
    let divisor = match spec.class() {
        VibratorClass::V => spec.m(),
        _ => mass,
    };
    let env = (-zeta * wn * t).exp();
    if wd < 1e-9 * wn {
        Ok(t * env / divisor)
    } else {
        Ok(env * (wd * t).sin() / (divisor * wd))
    }
}

/// Frequency transfer function of the reduced class. Classes I-III divide by
/// the primary stiffness k; classes IV-V by their effective stiffness.
pub fn transfer(spec: &VibratorSpec, omega: f64) -> Result<Complex64, Error> {
    let ep = effective(spec, omega)?;
    if ep.mass <= 0.0 {
        return Err(Error::MassNonPositive {
            m_eff: ep.mass,
            omega,
        });
    }
    let rp = restricted(spec, omega)?;
    let (zeta, gamma) = (rp.zeta_eff.unwrap(), rp.gamma_eff.unwrap());
    let restoring = match spec.class() {
        VibratorClass::I | VibratorClass::II | VibratorClass::III => spec.k(),
        _ => ep.stiffness,
    };
    let denom = Complex64::new(
        restoring * (1.0 - gamma * gamma),
        restoring * 2.0 * zeta * gamma,
    );
    if denom.norm() < 1e-300 {
        return Err(Error::ResonanceSingular { omega });
    }
    Ok(Complex64::new(1.0, 0.0) / denom)
}
