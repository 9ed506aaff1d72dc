//! Numerical verification: the independent oracles and limiting-behaviour
//! probes that make the model's claims testable.
//!
//! Four check families:
//!
//! * [`check_spectral_identity`] — k_eff − m_eff ω² + iω c_eff must equal
//!   the spectral polynomial D(ω) on a grid (the primary oracle).
//! * [`check_ode_residual`] / [`check_ode_residual_impulse`] — closed-form
//!   responses substituted back into the equivalent second-order equation
//!   via central differences.
//! * [`check_class_reduction`] — the class-specific reduced forms of
//!   classes I–V against the canonical class-VI pipeline.
//! * [`check_asymptotics`] — threshold probes of the limiting behaviour of
//!   m_eff, c_eff, k_eff at extreme frequencies.
//!
//! Reports are deterministic given (spec, grid, seed).

pub mod direct;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::effective::{effective_params, spectral_polynomial};
use crate::error::Error;
use crate::grid::logspace;
use crate::model::{OrderProfile, VibratorClass, VibratorSpec};
use crate::response::{
    free_response_fn, impulse_response_fn, transfer_function, InitialConditions,
};
use crate::restricted::{restricted_params, RestrictionStatus};

/// One measurement inside a report; passes when `error <= threshold`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub label: String,
    pub error: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(label: impl Into<String>, error: f64, threshold: f64) -> Self {
        CheckRecord {
            label: label.into(),
            pass: error <= threshold,
            error,
            threshold,
        }
    }
}

/// Outcome of one check family over a grid. `worst_error` is expressed in
/// units of the report threshold (records carrying a different per-record
/// threshold are rescaled), so `pass ⟺ worst_error ≤ threshold`.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub threshold: f64,
    pub worst_error: f64,
    pub pass: bool,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn from_records(
        name: impl Into<String>,
        threshold: f64,
        records: Vec<CheckRecord>,
    ) -> Self {
        let worst_error = records
            .iter()
            .map(|r| {
                if r.threshold == threshold || threshold == 0.0 {
                    r.error
                } else {
                    r.error * (threshold / r.threshold)
                }
            })
            .fold(f64::NEG_INFINITY, f64::max)
            .max(0.0);
        let pass = records.iter().all(|r| r.pass);
        VerificationReport {
            name: name.into(),
            threshold,
            worst_error,
            pass,
            records,
        }
    }

    /// Collapse this report into a single record for aggregation across specs.
    pub fn as_record(&self, label: impl Into<String>) -> CheckRecord {
        CheckRecord {
            label: label.into(),
            error: self.worst_error,
            threshold: self.threshold,
            pass: self.pass,
        }
    }
}

// ---------------------------------------------------------------------------
// Seeded random specs
// ---------------------------------------------------------------------------

/// Reproducible random-spec source: m, c, k log-uniform in [0.1, 10],
/// constant orders uniform in the admissible ranges shrunk by a margin of
/// 0.05 to avoid boundary ill-conditioning.
pub struct SpecSampler {
    rng: ChaCha8Rng,
}

pub const DEFAULT_SEED: u64 = 42;

impl SpecSampler {
    pub fn new(seed: u64) -> Self {
        SpecSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn coefficients(&mut self) -> (f64, f64, f64) {
        let m = 10f64.powf(self.rng.gen_range(-1.0..=1.0));
        let c = 10f64.powf(self.rng.gen_range(-1.0..=1.0));
        let k = 10f64.powf(self.rng.gen_range(-1.0..=1.0));
        (m, c, k)
    }

    pub fn constant_orders(&mut self) -> (f64, f64, f64) {
        let alpha = self.rng.gen_range(1.05..=2.95);
        let beta = self.rng.gen_range(0.05..=1.95);
        let lambda = self.rng.gen_range(0.05..=0.95);
        (alpha, beta, lambda)
    }

    /// A frequency in roughly [0.5, 2], log-uniform.
    pub fn evaluation_frequency(&mut self) -> f64 {
        10f64.powf(self.rng.gen_range(-0.3..=0.3))
    }

    /// Random spec of the given class with constant orders; quantities the
    /// class fixes are drawn and discarded so the stream stays aligned
    /// across classes.
    pub fn sample(&mut self, class: VibratorClass) -> VibratorSpec {
        let (m, c, k) = self.coefficients();
        let (alpha, beta, lambda) = self.constant_orders();
        let cst = OrderProfile::Constant;
        match class {
            VibratorClass::I => VibratorSpec::class_i(m, k, cst(alpha)),
            VibratorClass::II => VibratorSpec::class_ii(m, c, k, cst(beta)),
            VibratorClass::III => VibratorSpec::class_iii(m, c, k, cst(alpha), cst(beta)),
            VibratorClass::IV => VibratorSpec::class_iv(m, k, cst(alpha), cst(lambda)),
            VibratorClass::V => VibratorSpec::class_v(m, k, cst(lambda)),
            VibratorClass::VI => {
                VibratorSpec::class_vi(m, c, k, cst(alpha), cst(beta), cst(lambda))
            }
        }
        .expect("sampled coefficients are admissible")
    }
}

// ---------------------------------------------------------------------------
// Spectral identity
// ---------------------------------------------------------------------------

/// Verify k_eff − m_eff ω² + iω c_eff = D(ω) at every grid point, to
/// `rel_tol` relative (absolute fallback 1e-14 where |D| < 1e-10).
pub fn check_spectral_identity(
    spec: &VibratorSpec,
    omega_grid: &[f64],
    rel_tol: f64,
) -> VerificationReport {
    let mut records = Vec::with_capacity(omega_grid.len());
    for &omega in omega_grid {
        let record = match (
            effective_params(spec, omega),
            spectral_polynomial(spec, omega),
        ) {
            (Ok(ep), Ok(d)) => {
                let lhs =
                    Complex64::new(ep.stiffness - ep.mass * omega * omega, omega * ep.damping);
                let diff = (lhs - d).norm();
                if d.norm() >= 1e-10 {
                    CheckRecord::new(format!("omega={omega}"), diff / d.norm(), rel_tol)
                } else {
                    CheckRecord::new(format!("omega={omega} (|D| small)"), diff, 1e-14)
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                CheckRecord::new(format!("omega={omega}: {e}"), f64::INFINITY, rel_tol)
            }
        };
        records.push(record);
    }
    VerificationReport::from_records("spectral identity", rel_tol, records)
}

// ---------------------------------------------------------------------------
// ODE residual
// ---------------------------------------------------------------------------

const RESIDUAL_TOL: f64 = 1e-4;
const RESIDUAL_FLOOR: f64 = 1e-30;

fn residual_records(
    response: &dyn Fn(f64) -> f64,
    mass: f64,
    damping: f64,
    stiffness: f64,
    t_grid: &[f64],
    step: f64,
) -> Vec<CheckRecord> {
    t_grid
        .iter()
        .map(|&t| {
            let (xm, x0, xp) = (response(t - step), response(t), response(t + step));
            let xdd = (xp - 2.0 * x0 + xm) / (step * step);
            let xd = (xp - xm) / (2.0 * step);
            let residual = mass * xdd + damping * xd + stiffness * x0;
            let scale = (mass * xdd)
                .abs()
                .max((stiffness * x0).abs())
                .max(RESIDUAL_FLOOR);
            CheckRecord::new(format!("t={t}"), residual.abs() / scale, RESIDUAL_TOL)
        })
        .collect()
}

/// Substitute the closed-form free response into the equivalent second-order
/// equation with central differences of width `step`; the relative residual
/// must stay below 1e-4.
pub fn check_ode_residual(
    spec: &VibratorSpec,
    omega: f64,
    ic: InitialConditions,
    t_grid: &[f64],
    step: f64,
) -> Result<VerificationReport, Error> {
    let x = free_response_fn(spec, omega, ic)?;
    let ep = effective_params(spec, omega)?;
    let records = residual_records(&x, ep.mass, ep.damping, ep.stiffness, t_grid, step);
    Ok(VerificationReport::from_records(
        "free-response ODE residual",
        RESIDUAL_TOL,
        records,
    ))
}

/// Same residual check for the impulse response (the t = 0 kink must be
/// excluded from `t_grid`).
pub fn check_ode_residual_impulse(
    spec: &VibratorSpec,
    omega: f64,
    t_grid: &[f64],
    step: f64,
) -> Result<VerificationReport, Error> {
    let h = impulse_response_fn(spec, omega)?;
    let ep = effective_params(spec, omega)?;
    let records = residual_records(&h, ep.mass, ep.damping, ep.stiffness, t_grid, step);
    Ok(VerificationReport::from_records(
        "impulse-response ODE residual",
        RESIDUAL_TOL,
        records,
    ))
}

// ---------------------------------------------------------------------------
// Class reduction
// ---------------------------------------------------------------------------

const REDUCTION_TOL: f64 = 1e-12;

fn rel_dev(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

fn rel_dev_complex(a: Complex64, b: Complex64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).norm() / a.norm().max(b.norm()).max(f64::MIN_POSITIVE)
}

/// Compare the class-specific reduced forms of a class I–V spec against the
/// canonical class-VI pipeline over a frequency grid: effective parameters
/// everywhere, restricted parameters, responses and transfer function
/// wherever their restrictions hold. Panics on class VI.
pub fn check_class_reduction(spec: &VibratorSpec, omega_grid: &[f64]) -> VerificationReport {
    assert!(
        spec.class() != VibratorClass::VI,
        "class reduction compares classes I-V against the general form"
    );
    let canonical = spec.canonicalize();
    let ic = InitialConditions { x0: 1.0, v0: 1.0 };
    let t_probes = [0.4, 1.3, 3.7];

    let mut worst: Vec<(&str, f64)> = vec![
        ("m_eff", 0.0),
        ("c_eff", 0.0),
        ("k_eff", 0.0),
        ("zeta_eff", 0.0),
        ("omega_effn", 0.0),
        ("omega_effd", 0.0),
        ("gamma_eff", 0.0),
        ("free response", 0.0),
        ("impulse response", 0.0),
        ("transfer function", 0.0),
    ];
    let mut status_mismatches = 0usize;
    let bump = |worst: &mut Vec<(&str, f64)>, key: &str, err: f64| {
        let slot = worst
            .iter_mut()
            .find(|(k, _)| *k == key)
            .expect("known key");
        if err > slot.1 {
            slot.1 = err;
        }
    };

    for &omega in omega_grid {
        let d_ep = direct::effective(spec, omega).expect("constant orders in range");
        let c_ep = effective_params(&canonical, omega).expect("constant orders in range");
        bump(&mut worst, "m_eff", rel_dev(d_ep.mass, c_ep.mass));
        bump(&mut worst, "c_eff", rel_dev(d_ep.damping, c_ep.damping));
        bump(&mut worst, "k_eff", rel_dev(d_ep.stiffness, c_ep.stiffness));

        let d_rp = direct::restricted(spec, omega).expect("in range");
        let c_rp = restricted_params(&canonical, omega).expect("in range");
        if d_rp.status != c_rp.status {
            status_mismatches += 1;
            continue;
        }
        let pairs = [
            ("zeta_eff", d_rp.zeta_eff, c_rp.zeta_eff),
            ("omega_effn", d_rp.omega_effn, c_rp.omega_effn),
            ("omega_effd", d_rp.omega_effd, c_rp.omega_effd),
            ("gamma_eff", d_rp.gamma_eff, c_rp.gamma_eff),
        ];
        for (key, d, c) in pairs {
            if let (Some(d), Some(c)) = (d, c) {
                bump(&mut worst, key, rel_dev(d, c));
            }
        }

        if d_rp.status == RestrictionStatus::Ok {
            let x_can = free_response_fn(&canonical, omega, ic).expect("status OK");
            let h_can = impulse_response_fn(&canonical, omega).expect("status OK");
            for t in t_probes {
                let xd = direct::free_response_at(spec, omega, ic, t).expect("status OK");
                let hd = direct::impulse_response_at(spec, omega, t).expect("status OK");
                bump(&mut worst, "free response", rel_dev(xd, x_can(t)));
                bump(&mut worst, "impulse response", rel_dev(hd, h_can(t)));
            }
        }
        if d_rp.status != RestrictionStatus::MassNonPositive {
            let hd = direct::transfer(spec, omega);
            let hc = transfer_function(&canonical, omega);
            if let (Ok(hd), Ok(hc)) = (hd, hc) {
                bump(&mut worst, "transfer function", rel_dev_complex(hd, hc.h));
            }
        }
    }

    let mut records: Vec<CheckRecord> = worst
        .into_iter()
        .map(|(key, err)| CheckRecord::new(key, err, REDUCTION_TOL))
        .collect();
    records.push(CheckRecord::new(
        "restriction status agreement",
        status_mismatches as f64 * REDUCTION_TOL * 2.0,
        REDUCTION_TOL,
    ));
    VerificationReport::from_records(
        format!("class {} reduction", spec.class()),
        REDUCTION_TOL,
        records,
    )
}

// ---------------------------------------------------------------------------
// Asymptotic probes
// ---------------------------------------------------------------------------

fn const_vi(m: f64, c: f64, k: f64, a: f64, b: f64, l: f64) -> VibratorSpec {
    VibratorSpec::class_vi(
        m,
        c,
        k,
        OrderProfile::Constant(a),
        OrderProfile::Constant(b),
        OrderProfile::Constant(l),
    )
    .expect("probe spec is admissible")
}

/// Threshold probes for the limiting behaviour of the effective parameters,
/// plus the nonnegativity of k_eff over seeded random specs. Records carry a
/// signed margin: `error <= 0` means the probe inequality holds.
pub fn check_asymptotics(seed: u64) -> VerificationReport {
    let mut records = Vec::new();
    let mut probe = |label: &str, margin: f64| {
        records.push(CheckRecord::new(label, margin, 0.0));
    };

    // vanishing vs diverging effective mass at large omega
    let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.0);
    let m_small = effective_params(&spec, 1e6).unwrap().mass;
    probe(
        "high-frequency mass decay (alpha=1.5): |m_eff(1e6)| < 1e-2",
        m_small.abs() - 1e-2,
    );
    let spec = const_vi(1.0, 1.0, 1.0, 2.5, 1.0, 0.0);
    let m_big = effective_params(&spec, 1e6).unwrap().mass;
    probe(
        "high-frequency mass growth (alpha=2.5): m_eff(1e6) > 1e8",
        1e8 - m_big,
    );

    // negative mass at small omega
    let spec = const_vi(1.0, 1.0, 1.0, 2.5, 0.9, 0.0);
    let m_neg = effective_params(&spec, 1e-4).unwrap().mass;
    probe(
        "low-frequency negative mass (alpha=2.5, beta=0.9): m_eff(1e-4) < -100",
        m_neg - (-100.0),
    );

    // diverging damping of both signs at large omega
    let spec = const_vi(1.0, 1.0, 1.0, 1.5, 0.5, 0.0);
    let c_pos = effective_params(&spec, 1e6).unwrap().damping;
    probe(
        "high-frequency damping growth (alpha=1.5, beta=0.5): c_eff(1e6) > 1e6",
        1e6 - c_pos,
    );
    let spec = const_vi(1.0, 1.0, 1.0, 2.5, 0.5, 0.0);
    let c_neg = effective_params(&spec, 1e6).unwrap().damping;
    probe(
        "high-frequency negative damping (alpha=2.5, beta=0.5): c_eff(1e6) < -1e6",
        c_neg - (-1e6),
    );

    // dominant-term approximations of c_eff with alpha=1.5, beta=0.5, lambda=0.3
    let spec = const_vi(1.0, 1.0, 1.0, 1.5, 0.5, 0.3);
    {
        use crate::effective::sin_half_pi;
        let w = 1e4;
        let full = effective_params(&spec, w).unwrap().damping;
        let approx = 1.0 * w.powf(1.5 - 1.0) * sin_half_pi(1.5);
        probe(
            "high-frequency damping approximation within 1%",
            ((full - approx) / full).abs() - 1e-2,
        );
        let w = 1e-4;
        let full = effective_params(&spec, w).unwrap().damping;
        let approx =
            1.0 * w.powf(0.5 - 1.0) * sin_half_pi(0.5) + 1.0 * w.powf(0.3 - 1.0) * sin_half_pi(0.3);
        probe(
            "low-frequency damping approximation within 1%",
            ((full - approx) / full).abs() - 1e-2,
        );
    }

    // k_eff >= 0 on every random spec and grid point
    let mut sampler = SpecSampler::new(seed);
    let grid = logspace(1e-2, 1e2, 64);
    let mut min_keff = f64::INFINITY;
    for _ in 0..50 {
        let spec = sampler.sample(VibratorClass::VI);
        for &w in &grid {
            min_keff = min_keff.min(effective_params(&spec, w).unwrap().stiffness);
        }
    }
    probe(
        "effective stiffness nonnegative over 50 random specs",
        -min_keff,
    );

    VerificationReport::from_records("asymptotic probes", 0.0, records)
}

// ---------------------------------------------------------------------------
// Default verification run
// ---------------------------------------------------------------------------

/// All four check families with their default grids, aggregated to one
/// record per spec. Deterministic for a fixed seed.
pub fn default_verification(seed: u64) -> Vec<VerificationReport> {
    let grid = logspace(1e-2, 1e2, 64);
    let mut reports = Vec::new();

    // spectral identity over 200 random constant-order specs
    let mut sampler = SpecSampler::new(seed);
    let mut records = Vec::with_capacity(200);
    for i in 0..200 {
        let spec = sampler.sample(VibratorClass::VI);
        let rep = check_spectral_identity(&spec, &grid, 1e-10);
        records.push(rep.as_record(format!("random spec {i}")));
    }
    reports.push(VerificationReport::from_records(
        "spectral identity (200 random specs x 64 frequencies)",
        1e-10,
        records,
    ));

    // ODE residuals over 20 random specs with status OK
    let mut sampler = SpecSampler::new(seed);
    let ic = InitialConditions { x0: 1.0, v0: 1.0 };
    let t_grid = crate::grid::linspace(0.1, 20.0, 120);
    let mut records = Vec::new();
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 20 && attempts < 10_000 {
        attempts += 1;
        let spec = sampler.sample(VibratorClass::VI);
        let omega = sampler.evaluation_frequency();
        let ok = matches!(
            restricted_params(&spec, omega),
            Ok(rp) if rp.status == RestrictionStatus::Ok
        );
        if !ok {
            continue;
        }
        accepted += 1;
        let free = check_ode_residual(&spec, omega, ic, &t_grid, 1e-4).expect("status OK");
        records.push(free.as_record(format!("free response, spec {accepted}")));
        let imp = check_ode_residual_impulse(&spec, omega, &t_grid, 1e-4).expect("status OK");
        records.push(imp.as_record(format!("impulse response, spec {accepted}")));
    }
    reports.push(VerificationReport::from_records(
        "ODE residual (20 random specs, free + impulse)",
        RESIDUAL_TOL,
        records,
    ));

    // class reduction, 20 specs per class I-V
    let mut sampler = SpecSampler::new(seed);
    let mut records = Vec::new();
    for class in [
        VibratorClass::I,
        VibratorClass::II,
        VibratorClass::III,
        VibratorClass::IV,
        VibratorClass::V,
    ] {
        for i in 0..20 {
            let spec = sampler.sample(class);
            let rep = check_class_reduction(&spec, &grid);
            records.push(rep.as_record(format!("class {class}, spec {i}")));
        }
    }
    reports.push(VerificationReport::from_records(
        "class reduction (I-V, 20 specs each x 64 frequencies)",
        REDUCTION_TOL,
        records,
    ));

    reports.push(check_asymptotics(seed));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn spectral_identity_classical_spec_is_tight() {
        let spec = const_vi(1.0, 0.2, 1.0, 2.0, 1.0, 0.0);
        let grid = logspace(1e-2, 1e2, 64);
        let rep = check_spectral_identity(&spec, &grid, 1e-12);
        assert!(rep.pass, "worst {}", rep.worst_error);
    }

    #[test]
    fn spectral_identity_fixture_spec() {
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.5);
        let rep = check_spectral_identity(&spec, &[1.0], 1e-10);
        assert!(rep.pass);
        let d = spectral_polynomial(&spec, 1.0).unwrap();
        assert_abs_diff_eq!(d.im, 2.414213562373095, epsilon = 1e-12);
    }

    #[test]
    fn spectral_identity_random_specs() {
        let mut sampler = SpecSampler::new(DEFAULT_SEED);
        let grid = logspace(1e-2, 1e2, 64);
        for _ in 0..200 {
            let spec = sampler.sample(VibratorClass::VI);
            let rep = check_spectral_identity(&spec, &grid, 1e-10);
            assert!(rep.pass, "spec {spec:?}: worst {}", rep.worst_error);
        }
    }

    #[test]
    fn spectral_identity_catches_a_sign_error() {
        // a mutant with flipped damping sign must violate the identity
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.5);
        let ep = effective_params(&spec, 1.0).unwrap();
        let d = spectral_polynomial(&spec, 1.0).unwrap();
        let mutant = Complex64::new(
            ep.stiffness - ep.mass * 1.0,
            -ep.damping, // sign error injected here
        );
        let rel = (mutant - d).norm() / d.norm();
        assert!(rel > 1e-2, "mutation must be detected, rel = {rel}");
    }

    #[test]
    fn ode_residual_classical() {
        let spec = const_vi(1.0, 0.2, 1.0, 2.0, 1.0, 0.0);
        let t_grid = crate::grid::linspace(0.1, 20.0, 120);
        let ic = InitialConditions { x0: 1.0, v0: 0.0 };
        let rep = check_ode_residual(&spec, 1.0, ic, &t_grid, 1e-4).unwrap();
        assert!(rep.worst_error <= 1e-5, "worst {}", rep.worst_error);
    }

    #[test]
    fn ode_residual_fractional_fixture() {
        let spec = const_vi(1.0, 0.2, 1.0, 1.9, 1.0, 0.0);
        let t_grid = crate::grid::linspace(0.1, 20.0, 200);
        let ic = InitialConditions { x0: 1.0, v0: 1.0 };
        let rep = check_ode_residual(&spec, 1.0, ic, &t_grid, 1e-4).unwrap();
        assert!(rep.pass, "worst {}", rep.worst_error);
        let rep = check_ode_residual_impulse(&spec, 1.0, &t_grid, 1e-4).unwrap();
        assert!(rep.pass, "worst {}", rep.worst_error);
    }

    #[test]
    fn class_reduction_examples() {
        use crate::effective::effective_mass;
        // class I at ω = 1: m_eff1 = −cos(3π/4)
        let spec = VibratorSpec::class_i(1.0, 1.0, OrderProfile::Constant(1.5)).unwrap();
        let direct_mass = direct::effective(&spec, 1.0).unwrap().mass;
        assert_abs_diff_eq!(
            direct_mass,
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            direct_mass,
            effective_mass(&spec.canonicalize(), 1.0).unwrap(),
            epsilon = 1e-14
        );
        // class V at ω = 1: c_eff5 = sin(π/4)
        let spec = VibratorSpec::class_v(1.0, 1.0, OrderProfile::Constant(0.5)).unwrap();
        let direct_damping = direct::effective(&spec, 1.0).unwrap().damping;
        assert_abs_diff_eq!(
            direct_damping,
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            direct_damping,
            crate::effective::effective_damping(&spec.canonicalize(), 1.0).unwrap(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn class_ii_with_classical_damping_order_is_classical() {
        let spec = VibratorSpec::class_ii(2.0, 0.4, 3.0, OrderProfile::Constant(1.0)).unwrap();
        for omega in [0.3, 1.0, 5.0] {
            let ep = direct::effective(&spec, omega).unwrap();
            assert_abs_diff_eq!(ep.mass, 2.0, epsilon = 1e-12);
            assert_abs_diff_eq!(ep.damping, 0.4, epsilon = 1e-12);
            assert_abs_diff_eq!(ep.stiffness, 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn class_reduction_all_classes_agree() {
        let grid = logspace(1e-2, 1e2, 64);
        let mut sampler = SpecSampler::new(DEFAULT_SEED);
        for class in [
            VibratorClass::I,
            VibratorClass::II,
            VibratorClass::III,
            VibratorClass::IV,
            VibratorClass::V,
        ] {
            for _ in 0..5 {
                let spec = sampler.sample(class);
                let rep = check_class_reduction(&spec, &grid);
                assert!(
                    rep.pass,
                    "class {class} spec {spec:?} worst {}",
                    rep.worst_error
                );
            }
        }
    }

    #[test]
    fn asymptotic_probes_measured_values() {
        // the probes that hold numerically
        let rep = check_asymptotics(DEFAULT_SEED);
        let by_label = |needle: &str| {
            rep.records
                .iter()
                .find(|r| r.label.contains(needle))
                .unwrap_or_else(|| panic!("missing probe {needle}"))
        };
        assert!(by_label("mass decay").pass);
        assert!(by_label("negative mass").pass);
        assert!(by_label("negative damping").pass);
        assert!(by_label("high-frequency damping approximation").pass);
        assert!(by_label("low-frequency damping approximation").pass);
        assert!(by_label("stiffness nonnegative").pass);
        // measured magnitudes behind the two growth probes: both sit near
        // 0.7071 * 10^3 at ω = 1e6, far below the stated 1e8 / 1e6 bars
        let spec = const_vi(1.0, 1.0, 1.0, 2.5, 1.0, 0.0);
        assert_abs_diff_eq!(
            effective_params(&spec, 1e6).unwrap().mass,
            707.1067811865477,
            epsilon = 1e-6
        );
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 0.5, 0.0);
        assert_abs_diff_eq!(
            effective_params(&spec, 1e6).unwrap().damping,
            707.1074882933287,
            epsilon = 1e-6
        );
    }

    #[test]
    fn sampler_is_deterministic() {
        let mut a = SpecSampler::new(7);
        let mut b = SpecSampler::new(7);
        for _ in 0..10 {
            let (m1, c1, k1) = a.coefficients();
            let (m2, c2, k2) = b.coefficients();
            assert_eq!((m1, c1, k1), (m2, c2, k2));
        }
    }

    #[test]
    fn default_verification_structure() {
        let reports = default_verification(DEFAULT_SEED);
        assert_eq!(reports.len(), 4);
        assert!(reports[0].name.contains("spectral"));
        assert!(reports[1].name.contains("ODE"));
        assert!(reports[2].name.contains("class reduction"));
        assert!(reports[3].name.contains("asymptotic"));
        // the oracle families hold on a correct build
        assert!(reports[0].pass, "spectral: {}", reports[0].worst_error);
        assert!(reports[1].pass, "residual: {}", reports[1].worst_error);
        assert!(reports[2].pass, "reduction: {}", reports[2].worst_error);
    }
}
