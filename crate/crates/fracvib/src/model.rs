//! Vibrator classes, order profiles, and spec validation.
//!
//! Six classes of vibrator are supported, distinguished by which of the
//! inertia, damping, and restoration forces carry a fractional order:
//!
//! | class | motion equation                                   | fixed        |
//! |-------|---------------------------------------------------|--------------|
//! | I     | m x^(α) + k x = f                                 | c = 0, λ ≡ 0 |
//! | II    | m x'' + c x^(β) + k x = f                         | α ≡ 2, λ ≡ 0 |
//! | III   | m x^(α) + c x^(β) + k x = f                       | λ ≡ 0        |
//! | IV    | m x^(α) + k x^(λ) = f                             | c = 0        |
//! | V     | m x'' + k x^(λ) = f                               | α ≡ 2, c = 0 |
//! | VI    | m x^(α) + c x^(β) + k x^(λ) = f                   | —            |
//!
//! Classes I–V are special cases of class VI; [`VibratorSpec::canonicalize`]
//! relabels any spec as the general form so downstream formulas have a single
//! dispatch path. Classes with no damping force store an inert β ≡ 1, which
//! reproduces the classical-reduction identities when combined with c = 0.
//!
//! Orders may vary with the evaluation frequency ω. Admissible ranges are
//! 1 < α(ω) < 3, 0 < β(ω) < 2, 0 ≤ λ(ω) < 1, checked at every evaluation
//! frequency (constant profiles once).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{check_frequency, Error};
use crate::expr::{self, ParseError, ProfileExpr};

/// Which of the three fractional orders a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Alpha,
    Beta,
    Lambda,
}

impl OrderKind {
    /// Admissible open/half-open range.
    pub fn contains(self, v: f64) -> bool {
        match self {
            OrderKind::Alpha => v > 1.0 && v < 3.0,
            OrderKind::Beta => v > 0.0 && v < 2.0,
            OrderKind::Lambda => (0.0..1.0).contains(&v),
        }
    }

    pub fn range_text(self) -> &'static str {
        match self {
            OrderKind::Alpha => "(1, 3)",
            OrderKind::Beta => "(0, 2)",
            OrderKind::Lambda => "[0, 1)",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Alpha => "alpha",
            OrderKind::Beta => "beta",
            OrderKind::Lambda => "lambda",
        })
    }
}

/// Construction-time validation failure for specs, tables, and profiles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("primary mass must be positive and finite, got {0}")]
    NonPositiveMass(f64),
    #[error("primary stiffness must be positive and finite, got {0}")]
    NonPositiveStiffness(f64),
    #[error("primary damping must be nonnegative and finite, got {0}")]
    NegativeDamping(f64),
    #[error("order table needs at least 2 points")]
    TableTooShort,
    #[error("order table frequencies must be finite and strictly increasing")]
    TableNotIncreasing,
    #[error("order table values must be finite")]
    TableValueNotFinite,
}

/// A frequency-dependent fractional order: constant, parsed expression, or
/// interpolation table.
#[derive(Debug, Clone)]
pub enum OrderProfile {
    Constant(f64),
    Expression(ProfileExpr),
    Table(OrderTable),
}

impl OrderProfile {
    /// Parse a DSL string into an expression profile.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Ok(OrderProfile::Expression(expr::parse(text)?))
    }

    /// Value at `omega`. `None` means the expression blew up there.
    pub fn eval(&self, omega: f64) -> Option<f64> {
        match self {
            OrderProfile::Constant(v) => Some(*v),
            OrderProfile::Expression(e) => e.eval(omega).ok(),
            OrderProfile::Table(t) => Some(t.eval(omega)),
        }
    }

    pub fn constant_value(&self) -> Option<f64> {
        match self {
            OrderProfile::Constant(v) => Some(*v),
            _ => None,
        }
    }
}

/// Sorted (ω, value) pairs with linear interpolation between nodes and
/// clamping beyond the first/last node.
#[derive(Debug, Clone)]
pub struct OrderTable {
    points: Vec<(f64, f64)>,
}

impl OrderTable {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self, ModelError> {
        if points.len() < 2 {
            return Err(ModelError::TableTooShort);
        }
        for pair in points.windows(2) {
            if !(pair[0].0.is_finite() && pair[1].0.is_finite() && pair[0].0 < pair[1].0) {
                return Err(ModelError::TableNotIncreasing);
            }
        }
        if points.iter().any(|(_, v)| !v.is_finite()) {
            return Err(ModelError::TableValueNotFinite);
        }
        Ok(OrderTable { points })
    }

    pub fn eval(&self, omega: f64) -> f64 {
        let pts = &self.points;
        if omega <= pts[0].0 {
            return pts[0].1;
        }
        if omega >= pts[pts.len() - 1].0 {
            return pts[pts.len() - 1].1;
        }
        let hi = pts.partition_point(|(w, _)| *w < omega);
        let (w0, v0) = pts[hi - 1];
        let (w1, v1) = pts[hi];
        v0 + (v1 - v0) * (omega - w0) / (w1 - w0)
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }
}

/// The α, β, λ profiles of a spec.
#[derive(Debug, Clone)]
pub struct OrderTriple {
    pub alpha: OrderProfile,
    pub beta: OrderProfile,
    pub lambda: OrderProfile,
}

/// The six vibrator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VibratorClass {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl VibratorClass {
    /// Classes whose motion equation has no damping force (c fixed at 0).
    pub fn fixes_damping(self) -> bool {
        matches!(
            self,
            VibratorClass::I | VibratorClass::IV | VibratorClass::V
        )
    }

    /// Classes whose inertia order is the classical α ≡ 2.
    pub fn fixes_alpha(self) -> bool {
        matches!(self, VibratorClass::II | VibratorClass::V)
    }

    /// Classes whose restoration order is the classical λ ≡ 0.
    pub fn fixes_lambda(self) -> bool {
        matches!(
            self,
            VibratorClass::I | VibratorClass::II | VibratorClass::III
        )
    }

    pub const ALL: [VibratorClass; 6] = [
        VibratorClass::I,
        VibratorClass::II,
        VibratorClass::III,
        VibratorClass::IV,
        VibratorClass::V,
        VibratorClass::VI,
    ];
}

impl fmt::Display for VibratorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VibratorClass::I => "I",
            VibratorClass::II => "II",
            VibratorClass::III => "III",
            VibratorClass::IV => "IV",
            VibratorClass::V => "V",
            VibratorClass::VI => "VI",
        })
    }
}

impl FromStr for VibratorClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(VibratorClass::I),
            "II" => Ok(VibratorClass::II),
            "III" => Ok(VibratorClass::III),
            "IV" => Ok(VibratorClass::IV),
            "V" => Ok(VibratorClass::V),
            "VI" => Ok(VibratorClass::VI),
            other => Err(format!("unknown vibrator class `{other}` (I..VI)")),
        }
    }
}

/// Evaluated order values at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderValues {
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
}

/// An immutable vibrator description: class tag, primary coefficients
/// m > 0, c ≥ 0, k > 0, and the order triple.
///
/// Class constraints are enforced structurally: the per-class constructors
/// only accept the free quantities and fill the fixed ones.
#[derive(Debug, Clone)]
pub struct VibratorSpec {
    class: VibratorClass,
    m: f64,
    c: f64,
    k: f64,
    orders: OrderTriple,
}

impl VibratorSpec {
    fn build(
        class: VibratorClass,
        m: f64,
        c: f64,
        k: f64,
        orders: OrderTriple,
    ) -> Result<Self, ModelError> {
        if !(m.is_finite() && m > 0.0) {
            return Err(ModelError::NonPositiveMass(m));
        }
        if !(k.is_finite() && k > 0.0) {
            return Err(ModelError::NonPositiveStiffness(k));
        }
        if !(c.is_finite() && c >= 0.0) {
            return Err(ModelError::NegativeDamping(c));
        }
        Ok(VibratorSpec {
            class,
            m,
            c,
            k,
            orders,
        })
    }

    /// m x^(α) + k x = f
    pub fn class_i(m: f64, k: f64, alpha: OrderProfile) -> Result<Self, ModelError> {
        Self::build(
            VibratorClass::I,
            m,
            0.0,
            k,
            OrderTriple {
                alpha,
                beta: OrderProfile::Constant(1.0),
                lambda: OrderProfile::Constant(0.0),
            },
        )
    }

    /// m x'' + c x^(β) + k x = f
    pub fn class_ii(m: f64, c: f64, k: f64, beta: OrderProfile) -> Result<Self, ModelError> {
        Self::build(
            VibratorClass::II,
            m,
            c,
            k,
            OrderTriple {
                alpha: OrderProfile::Constant(2.0),
                beta,
                lambda: OrderProfile::Constant(0.0),
            },
        )
    }

    /// m x^(α) + c x^(β) + k x = f
    pub fn class_iii(
        m: f64,
        c: f64,
        k: f64,
        alpha: OrderProfile,
        beta: OrderProfile,
    ) -> Result<Self, ModelError> {
        Self::build(
            VibratorClass::III,
            m,
            c,
            k,
            OrderTriple {
                alpha,
                beta,
                lambda: OrderProfile::Constant(0.0),
            },
        )
    }

    /// m x^(α) + k x^(λ) = f
    pub fn class_iv(
        m: f64,
        k: f64,
        alpha: OrderProfile,
        lambda: OrderProfile,
    ) -> Result<Self, ModelError> {
        Self::build(
            VibratorClass::IV,
            m,
            0.0,
            k,
            OrderTriple {
                alpha,
                beta: OrderProfile::Constant(1.0),
                lambda,
            },
        )
    }

    /// m x'' + k x^(λ) = f
    pub fn class_v(m: f64, k: f64, lambda: OrderProfile) -> Result<Self, ModelError> {
        Self::build(
            VibratorClass::V,
            m,
            0.0,
            k,
            OrderTriple {
                alpha: OrderProfile::Constant(2.0),
                beta: OrderProfile::Constant(1.0),
                lambda,
            },
        )
    }

    /// m x^(α) + c x^(β) + k x^(λ) = f
    pub fn class_vi(
        m: f64,
        c: f64,
        k: f64,
        alpha: OrderProfile,
        beta: OrderProfile,
        lambda: OrderProfile,
    ) -> Result<Self, ModelError> {
        Self::build(
            VibratorClass::VI,
            m,
            c,
            k,
            OrderTriple {
                alpha,
                beta,
                lambda,
            },
        )
    }

    pub fn class(&self) -> VibratorClass {
        self.class
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn orders(&self) -> &OrderTriple {
        &self.orders
    }

    /// The equivalent general-form (class VI) spec. Classes I–V keep their
    /// coefficients and stored orders; only the tag changes, since the fixed
    /// orders were materialized at construction.
    pub fn canonicalize(&self) -> VibratorSpec {
        VibratorSpec {
            class: VibratorClass::VI,
            ..self.clone()
        }
    }

    /// Evaluate the three orders at `omega` and check the admissible ranges.
    pub fn orders_at(&self, omega: f64) -> Result<OrderValues, Error> {
        check_frequency(omega)?;
        let eval_one = |profile: &OrderProfile, kind: OrderKind| -> Result<f64, Error> {
            let v = profile
                .eval(omega)
                .ok_or(Error::NonFiniteOrder { order: kind, omega })?;
            if !v.is_finite() {
                return Err(Error::NonFiniteOrder { order: kind, omega });
            }
            if !kind.contains(v) {
                return Err(Error::OrderOutOfRange {
                    order: kind,
                    value: v,
                    omega,
                });
            }
            Ok(v)
        };
        Ok(OrderValues {
            alpha: eval_one(&self.orders.alpha, OrderKind::Alpha)?,
            beta: eval_one(&self.orders.beta, OrderKind::Beta)?,
            lambda: eval_one(&self.orders.lambda, OrderKind::Lambda)?,
        })
    }

    /// Check order ranges over a frequency grid. Constant profiles are
    /// checked once; expression and table profiles at every grid point.
    pub fn validate(&self, grid: &[f64]) -> ValidationReport {
        assert!(!grid.is_empty(), "validation grid must be non-empty");
        assert!(
            grid.iter().all(|w| w.is_finite() && *w > 0.0),
            "validation grid frequencies must be positive"
        );
        let mut violations = Vec::new();
        let profiles = [
            (&self.orders.alpha, OrderKind::Alpha),
            (&self.orders.beta, OrderKind::Beta),
            (&self.orders.lambda, OrderKind::Lambda),
        ];
        for (profile, kind) in profiles {
            if let Some(v) = profile.constant_value() {
                if !kind.contains(v) {
                    violations.push(OrderViolation {
                        omega: None,
                        order: kind,
                        value: Some(v),
                    });
                }
                continue;
            }
            for &w in grid {
                match profile.eval(w) {
                    Some(v) if v.is_finite() && kind.contains(v) => {}
                    Some(v) => violations.push(OrderViolation {
                        omega: Some(w),
                        order: kind,
                        value: Some(v),
                    }),
                    None => violations.push(OrderViolation {
                        omega: Some(w),
                        order: kind,
                        value: None,
                    }),
                }
            }
        }
        ValidationReport { violations }
    }
}

/// One out-of-range (or non-finite) order value found by [`VibratorSpec::validate`].
/// `omega: None` means the profile is constant and violates at every frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderViolation {
    pub omega: Option<f64>,
    pub order: OrderKind,
    pub value: Option<f64>,
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Some(v) => write!(f, "{} = {v} out of {}", self.order, self.order.range_text())?,
            None => write!(f, "{} evaluated non-finite", self.order)?,
        }
        match self.omega {
            Some(w) => write!(f, " at omega = {w}"),
            None => write!(f, " at every omega"),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    violations: Vec<OrderViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[OrderViolation] {
        &self.violations
    }
}
