//! Error type shared by the numeric pipeline.

use thiserror::Error;

use crate::model::OrderKind;

/// Failure of an effective-parameter, restricted-parameter, response, or
/// Rayleigh evaluation at a given frequency.
///
/// Restriction violations (`MassNonPositive`, `OverCritical`) are ordinary
/// typed results here so sweeps can record a status per frequency instead of
/// aborting.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frequency must be positive and finite, got {omega}")]
    NonPositiveFrequency { omega: f64 },

    #[error("{order} = {value} out of {} at omega = {omega}", .order.range_text())]
    OrderOutOfRange {
        order: OrderKind,
        value: f64,
        omega: f64,
    },

    #[error("order profile for {order} evaluated non-finite at omega = {omega}")]
    NonFiniteOrder { order: OrderKind, omega: f64 },

    #[error("effective mass {m_eff} is not positive at omega = {omega}")]
    MassNonPositive { m_eff: f64, omega: f64 },

    #[error("effective stiffness vanished at omega = {omega}")]
    StiffnessZero { omega: f64 },

    #[error("|zeta_eff| = {} exceeds 1 at omega = {omega}", .zeta_eff.abs())]
    OverCritical { zeta_eff: f64, omega: f64 },

    #[error("transfer-function denominator is numerically singular at omega = {omega}")]
    ResonanceSingular { omega: f64 },

    #[error("Rayleigh decomposition requires zero primary damping, got c = {c}")]
    NonzeroPrimaryDamping { c: f64 },
}

pub(crate) fn check_frequency(omega: f64) -> Result<(), Error> {
    if omega.is_finite() && omega > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveFrequency { omega })
    }
}
