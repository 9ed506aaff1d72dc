//! Effective mass, damping, and stiffness of the equivalent second-order
//! representation, and the complex spectral polynomial used as its oracle.
//!
//! For the general vibrator m x^(α(ω)) + c x^(β(ω)) + k x^(λ(ω)) = f, the
//! equivalent representation at evaluation frequency ω > 0 is
//! m_eff x'' + c_eff x' + k_eff x = f with
//!
//! ```text
//! m_eff(ω) = −[ m ω^{α−2} cos(απ/2) + c ω^{β−2} cos(βπ/2) ]
//! c_eff(ω) =    m ω^{α−1} sin(απ/2) + c ω^{β−1} sin(βπ/2) + k ω^{λ−1} sin(λπ/2)
//! k_eff(ω) =    k ω^{λ} cos(λπ/2)
//! ```
//!
//! (orders evaluated at ω). The spectral polynomial
//! D(ω) = m(iω)^α + c(iω)^β + k(iω)^λ, taken on the principal branch
//! i^ν = cos(νπ/2) + i sin(νπ/2), satisfies the identity
//! D(ω) = k_eff − m_eff ω² + iω c_eff, which the `verify` module checks on
//! every grid.
//!
//! The domain is strictly ω > 0: ω^{β−2} and ω^{λ−1} diverge at 0 and the
//! frequency-domain derivation assumes a positive frequency. Requests at
//! ω ≤ 0 are errors, never NaN. m_eff and c_eff can legitimately be
//! negative; k_eff ≥ 0 always since λ ∈ [0, 1).

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Error;
use crate::model::{OrderValues, VibratorSpec};

/// cos(ν·π/2) with exact values on integer quadrants, so classical orders
/// (α = 2, β = 1, λ = 0) reduce exactly instead of picking up the rounding
/// of ν·π/2.
pub(crate) fn cos_half_pi(nu: f64) -> f64 {
    let r = nu.rem_euclid(4.0);
    if r == 0.0 {
        1.0
    } else if r == 1.0 {
        0.0
    } else if r == 2.0 {
        -1.0
    } else if r == 3.0 {
        0.0
    } else {
        (r * std::f64::consts::FRAC_PI_2).cos()
    }
}

/// sin(ν·π/2), exact on integer quadrants.
pub(crate) fn sin_half_pi(nu: f64) -> f64 {
    let r = nu.rem_euclid(4.0);
    if r == 0.0 {
        0.0
    } else if r == 1.0 {
        1.0
    } else if r == 2.0 {
        0.0
    } else if r == 3.0 {
        -1.0
    } else {
        (r * std::f64::consts::FRAC_PI_2).sin()
    }
}

/// coef · ω^exponent · trig, with the zero factors short-circuited so that a
/// vanishing coefficient or trig weight never multiplies an overflowing
/// power (0 · ∞ would poison the sum with NaN).
pub(crate) fn power_term(coef: f64, omega: f64, exponent: f64, trig: f64) -> f64 {
    if coef == 0.0 || trig == 0.0 {
        0.0
    } else {
        coef * omega.powf(exponent) * trig
    }
}

/// The three effective coefficients at one evaluation frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EffectiveParams {
    pub omega: f64,
    pub mass: f64,
    pub damping: f64,
    pub stiffness: f64,
}

/// Evaluate all three effective coefficients at `omega`.
pub fn effective_params(spec: &VibratorSpec, omega: f64) -> Result<EffectiveParams, Error> {
    let orders = spec.orders_at(omega)?;
    Ok(params_from_orders(spec, omega, orders))
}

pub(crate) fn params_from_orders(
    spec: &VibratorSpec,
    omega: f64,
    ov: OrderValues,
) -> EffectiveParams {
    let (m, c, k) = (spec.m(), spec.c(), spec.k());
    let mass = -(power_term(m, omega, ov.alpha - 2.0, cos_half_pi(ov.alpha))
        + power_term(c, omega, ov.beta - 2.0, cos_half_pi(ov.beta)));
    let damping = power_term(m, omega, ov.alpha - 1.0, sin_half_pi(ov.alpha))
        + power_term(c, omega, ov.beta - 1.0, sin_half_pi(ov.beta))
        + power_term(k, omega, ov.lambda - 1.0, sin_half_pi(ov.lambda));
    let stiffness = power_term(k, omega, ov.lambda, cos_half_pi(ov.lambda));
    EffectiveParams {
        omega,
        mass,
        damping,
        stiffness,
    }
}

/// Effective mass m_eff(ω). Negative values are legitimate (small ω with
/// 0 < β < 1, or by sign of cos(απ/2)).
pub fn effective_mass(spec: &VibratorSpec, omega: f64) -> Result<f64, Error> {
    Ok(effective_params(spec, omega)?.mass)
}

/// Effective damping coefficient c_eff(ω). Negative values are legitimate
/// and correspond to self-vibration.
pub fn effective_damping(spec: &VibratorSpec, omega: f64) -> Result<f64, Error> {
    Ok(effective_params(spec, omega)?.damping)
}

/// Effective stiffness k_eff(ω) = k ω^λ cos(λπ/2) ≥ 0.
pub fn effective_stiffness(spec: &VibratorSpec, omega: f64) -> Result<f64, Error> {
    Ok(effective_params(spec, omega)?.stiffness)
}

/// The spectral polynomial D(ω) = m(iω)^α + c(iω)^β + k(iω)^λ, each power on
/// the principal branch: (iω)^ν = ω^ν (cos(νπ/2) + i sin(νπ/2)).
pub fn spectral_polynomial(spec: &VibratorSpec, omega: f64) -> Result<Complex64, Error> {
    let ov = spec.orders_at(omega)?;
    let term = |coef: f64, nu: f64| -> Complex64 {
        if coef == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let r = coef * omega.powf(nu);
        Complex64::new(r * cos_half_pi(nu), r * sin_half_pi(nu))
    };
    Ok(term(spec.m(), ov.alpha) + term(spec.c(), ov.beta) + term(spec.k(), ov.lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::OrderProfile;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn const_vi(m: f64, c: f64, k: f64, a: f64, b: f64, l: f64) -> VibratorSpec {
        VibratorSpec::class_vi(
            m,
            c,
            k,
            OrderProfile::Constant(a),
            OrderProfile::Constant(b),
            OrderProfile::Constant(l),
        )
        .unwrap()
    }

    #[test]
    fn half_pi_trig_exact_on_quadrants() {
        assert_eq!(cos_half_pi(0.0), 1.0);
        assert_eq!(cos_half_pi(1.0), 0.0);
        assert_eq!(cos_half_pi(2.0), -1.0);
        assert_eq!(cos_half_pi(3.0), 0.0);
        assert_eq!(sin_half_pi(0.0), 0.0);
        assert_eq!(sin_half_pi(1.0), 1.0);
        assert_eq!(sin_half_pi(2.0), 0.0);
        assert_eq!(sin_half_pi(3.0), -1.0);
        assert_relative_eq!(cos_half_pi(0.5), std::f64::consts::FRAC_1_SQRT_2);
        assert_relative_eq!(sin_half_pi(2.5), -std::f64::consts::FRAC_1_SQRT_2);
    }

    #[test]
    fn classical_reduction_is_exact() {
        let spec = const_vi(2.0, 3.0, 5.0, 2.0, 1.0, 0.0);
        for omega in [1e-3, 0.7, 1.0, 13.0, 1e4] {
            let p = effective_params(&spec, omega).unwrap();
            assert_eq!(p.mass, 2.0);
            assert_eq!(p.damping, 3.0);
            assert_eq!(p.stiffness, 5.0);
        }
    }

    #[test]
    fn effective_mass_fixture() {
        // confirmed against the spectral identity
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.5);
        assert_abs_diff_eq!(
            effective_mass(&spec, 1.0).unwrap(),
            0.7071067811865474,
            epsilon = 1e-12
        );
        let spec = const_vi(1.0, 1.0, 1.0, 1.3, 0.3, 0.0);
        assert_abs_diff_eq!(
            effective_mass(&spec, 1.0).unwrap(),
            -0.4370160244488212,
            epsilon = 1e-12
        );
    }

    #[test]
    fn effective_damping_fixtures() {
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.5);
        assert_abs_diff_eq!(
            effective_damping(&spec, 1.0).unwrap(),
            2.414213562373095,
            epsilon = 1e-12
        );
        let spec = const_vi(1.0, 0.2, 1.0, 1.9, 1.0, 0.0);
        assert_abs_diff_eq!(
            effective_damping(&spec, 1.0).unwrap(),
            0.356434465040231,
            epsilon = 1e-12
        );
    }

    #[test]
    fn effective_stiffness_fixtures() {
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.0);
        assert_eq!(effective_stiffness(&spec, 0.37).unwrap(), 1.0);
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.5);
        assert_abs_diff_eq!(
            effective_stiffness(&spec, 1.0).unwrap(),
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-12
        );
        // k_eff → 0 as ω → 0+ when λ > 0
        assert!(effective_stiffness(&spec, 1e-12).unwrap() < 1e-5);
    }

    #[test]
    fn table_profile_flows_through_the_pipeline() {
        use crate::model::OrderTable;
        let table = OrderTable::new(vec![(0.5, 1.4), (1.5, 1.6), (2.5, 1.8)]).unwrap();
        let spec = VibratorSpec::class_vi(
            1.0,
            1.0,
            1.0,
            OrderProfile::Table(table),
            OrderProfile::Constant(1.0),
            OrderProfile::Constant(0.5),
        )
        .unwrap();
        // at ω = 1 the table interpolates to α = 1.5
        let reference = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.5);
        let a = effective_params(&spec, 1.0).unwrap();
        let b = effective_params(&reference, 1.0).unwrap();
        assert_abs_diff_eq!(a.mass, b.mass, epsilon = 1e-14);
        assert_abs_diff_eq!(a.damping, b.damping, epsilon = 1e-14);
        assert_abs_diff_eq!(a.stiffness, b.stiffness, epsilon = 1e-14);
    }

    #[test]
    fn spectral_polynomial_fixture() {
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.5);
        let d = spectral_polynomial(&spec, 1.0).unwrap();
        assert_abs_diff_eq!(d.re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d.im, 2.414213562373095, epsilon = 1e-12);
    }

    #[test]
    fn spectral_polynomial_matches_independent_complex_powers() {
        // independent route: num-complex powf on (iω) via polar decomposition
        for (m, c, k, a, b, l) in [
            (1.0, 1.0, 1.0, 1.5, 1.0, 0.5),
            (2.0, 0.3, 5.0, 2.7, 1.9, 0.01),
            (0.4, 0.0, 1.3, 1.1, 0.2, 0.9),
        ] {
            let spec = const_vi(m, c, k, a, b, l);
            for omega in [0.01, 0.5, 1.0, 7.3, 90.0] {
                let d = spectral_polynomial(&spec, omega).unwrap();
                let iw = Complex64::new(0.0, omega);
                let d_ref = m * iw.powf(a) + c * iw.powf(b) + k * iw.powf(l);
                assert_abs_diff_eq!(d.re, d_ref.re, epsilon = 1e-10 * d_ref.norm());
                assert_abs_diff_eq!(d.im, d_ref.im, epsilon = 1e-10 * d_ref.norm());
            }
        }
    }

    #[test]
    fn classical_spectral_polynomial() {
        // α≡2, β≡1, λ≡0 gives D = k − mω² + icω
        let spec = const_vi(1.0, 0.2, 1.0, 2.0, 1.0, 0.0);
        for omega in [0.3, 1.0, 2.5] {
            let d = spectral_polynomial(&spec, omega).unwrap();
            assert_eq!(d.re, 1.0 - omega * omega);
            assert_eq!(d.im, 0.2 * omega);
        }
        // classical resonance: c = 0, m = k = 1, ω = 1 → D = 0
        let spec = const_vi(1.0, 0.0, 1.0, 2.0, 1.0, 0.0);
        let d = spectral_polynomial(&spec, 1.0).unwrap();
        assert_eq!(d, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn domain_is_strictly_positive_frequency() {
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.5);
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                effective_params(&spec, bad),
                Err(Error::NonPositiveFrequency { .. })
            ));
        }
    }

    #[test]
    fn out_of_range_order_is_an_error() {
        let spec = const_vi(1.0, 1.0, 1.0, 2.0, 1.0, 0.999);
        assert!(effective_params(&spec, 1.0).is_ok());
        let spec = VibratorSpec::class_vi(
            1.0,
            1.0,
            1.0,
            OrderProfile::parse("2 + 1.5*abs(sin(w))").unwrap(),
            OrderProfile::Constant(1.0),
            OrderProfile::Constant(0.0),
        )
        .unwrap();
        // 2 + 1.5 sin(π/2) = 3.5 > 3
        assert!(matches!(
            effective_params(&spec, std::f64::consts::FRAC_PI_2),
            Err(Error::OrderOutOfRange { .. })
        ));
    }

    #[test]
    fn asymptotic_signatures_at_extreme_frequencies() {
        // vanishing mass for 1 < α < 2
        let spec = const_vi(1.0, 1.0, 1.0, 1.5, 1.0, 0.0);
        assert!(effective_mass(&spec, 1e6).unwrap().abs() < 1e-2);
        // negative mass at small ω for 2 < α < 3, 0 < β < 1
        let spec = const_vi(1.0, 1.0, 1.0, 2.5, 0.9, 0.0);
        assert!(effective_mass(&spec, 1e-4).unwrap() < -100.0);
        // strongly negative damping at large ω for 2 < α < 3, 0 < β < 1
        let spec = const_vi(1.0, 1.0, 1.0, 2.5, 0.5, 0.0);
        assert!(effective_damping(&spec, 1e6).unwrap() < -1e6);
    }
}
