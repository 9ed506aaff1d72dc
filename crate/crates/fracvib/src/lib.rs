//! Analysis of vibrators with variable-order fractional forces.
//!
//! A vibrator here is a single-degree-of-freedom system whose inertia,
//! damping, and restoration forces may carry fractional derivative orders
//! α(ω), β(ω), λ(ω) that depend on the vibration frequency:
//!
//! ```text
//! m x^(α(ω))(t) + c x^(β(ω))(t) + k x^(λ(ω))(t) = f(t)
//! ```
//!
//! with 1 < α(ω) < 3, 0 < β(ω) < 2, 0 ≤ λ(ω) < 1. Six classes of this
//! equation (depending on which forces are fractional) are modelled by
//! [`model::VibratorSpec`]; all of them canonicalize to the general form.
//!
//! For each evaluation frequency the crate computes:
//!
//! * the equivalent integer-order representation — effective mass, damping,
//!   and stiffness ([`effective`]);
//! * the restricted damping ratio, natural frequencies, and frequency ratio
//!   ([`restricted`]);
//! * closed-form free and impulse responses in the time–frequency plane and
//!   the frequency transfer function ([`response`]);
//! * the generalized Rayleigh damping decomposition ([`rayleigh`]).
//!
//! Order profiles can be constants, interpolation tables, or expressions in
//! a small DSL ([`expr`]), e.g. `1.10 + 1.89*abs(sin(w))`.
//!
//! The [`verify`] module houses the numerical oracles: the spectral
//! identity k_eff − m_eff ω² + iω c_eff = m(iω)^α + c(iω)^β + k(iω)^λ,
//! finite-difference ODE residuals of the closed-form responses, reduction
//! checks of the per-class formulas against the canonical pipeline, and
//! asymptotic threshold probes.
//!
//! Everything is a pure function of (spec, frequency); all types are
//! immutable after construction and safe to share across threads.

pub mod effective;
pub mod error;
pub mod expr;
pub mod grid;
pub mod model;
pub mod rayleigh;
pub mod response;
pub mod restricted;
pub mod verify;

pub use effective::{
    effective_damping, effective_mass, effective_params, effective_stiffness, spectral_polynomial,
    EffectiveParams,
};
pub use error::Error;
pub use expr::ProfileExpr;
pub use model::{
    ModelError, OrderKind, OrderProfile, OrderTable, OrderTriple, OrderValues, ValidationReport,
    VibratorClass, VibratorSpec,
};
pub use rayleigh::{rayleigh_coefficients, RayleighDecomposition};
pub use response::{
    free_response, impulse_response, transfer_function, FrequencyResponsePoint, InitialConditions,
    TimeSeries,
};
pub use restricted::{
    classical_params, damped_frequency, damping_ratio, frequency_ratio, natural_frequency,
    restricted_params, ClassicalParams, RestrictedParams, RestrictionStatus,
};
pub use verify::{CheckRecord, SpecSampler, VerificationReport};
