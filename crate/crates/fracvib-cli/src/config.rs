//! JSON sweep configuration.
//!
//! A config is a single JSON document. Order profiles are given as numbers
//! (constant profile) or DSL strings:
//!
//! ```json
//! {
//!   "class": "VI",
//!   "m": 1.0, "c": 0.2, "k": 1.0,
//!   "alpha": "1.10 + 1.89*abs(cos(0.1*w))",
//!   "beta": "1 + 0.99*abs(sin(w))",
//!   "lambda": 0.3,
//!   "omega": { "min": 0.001, "max": 10.0, "count": 512, "spacing": "linear" },
//!   "response_omega": 1.1,
//!   "time": { "max": 50.0, "count": 2001 },
//!   "initial": { "x0": 1.0, "v0": 1.0 }
//! }
//! ```
//!
//! Keys a class fixes (for example `c` or `beta` for class I) must be
//! omitted; supplying them is a config error, not a silent override.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use fracvib::expr::ParseError;
use fracvib::grid::{linspace, logspace};
use fracvib::model::{ModelError, OrderProfile, VibratorClass, VibratorSpec};
use fracvib::response::InitialConditions;

pub const DEFAULT_OMEGA_MIN: f64 = 1e-3;
pub const DEFAULT_OMEGA_MAX: f64 = 10.0;
pub const DEFAULT_OMEGA_COUNT: usize = 512;
pub const DEFAULT_RESPONSE_OMEGA: f64 = 1.1;
pub const DEFAULT_TIME_MAX: f64 = 50.0;
pub const DEFAULT_TIME_COUNT: usize = 2001;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("config is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown vibrator class: {0}")]
    UnknownClass(String),
    #[error("class {class} requires key `{field}`")]
    MissingField {
        class: VibratorClass,
        field: &'static str,
    },
    #[error("class {class} fixes `{field}`; remove it from the config")]
    ForbiddenField {
        class: VibratorClass,
        field: &'static str,
    },
    #[error("order profile `{field}` does not parse: {source}")]
    BadProfile {
        field: &'static str,
        source: ParseError,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("invalid grid: {0}")]
    BadGrid(String),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ProfileField {
    Number(f64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOmega {
    min: f64,
    max: f64,
    count: usize,
    #[serde(default = "default_spacing")]
    spacing: String,
}

fn default_spacing() -> String {
    "linear".into()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTime {
    max: f64,
    count: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInitial {
    x0: f64,
    v0: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    class: Option<String>,
    m: f64,
    c: Option<f64>,
    k: f64,
    alpha: Option<ProfileField>,
    beta: Option<ProfileField>,
    lambda: Option<ProfileField>,
    omega: Option<RawOmega>,
    response_omega: Option<f64>,
    time: Option<RawTime>,
    initial: Option<RawInitial>,
    out: Option<PathBuf>,
}

/// A validated sweep configuration.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub spec: VibratorSpec,
    pub omega_grid: Vec<f64>,
    pub response_omega: f64,
    pub time_grid: Vec<f64>,
    pub initial: InitialConditions,
    pub out: Option<PathBuf>,
}

pub fn load(path: &Path) -> Result<SweepConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<SweepConfig, ConfigError> {
    let raw: RawConfig = serde_json::from_str(text)?;
    let class = match &raw.class {
        None => VibratorClass::VI,
        Some(s) => s
            .parse()
            .map_err(|_| ConfigError::UnknownClass(s.clone()))?,
    };

    let profile = |field: Option<&ProfileField>,
                   name: &'static str|
     -> Result<Option<OrderProfile>, ConfigError> {
        match field {
            None => Ok(None),
            Some(ProfileField::Number(v)) => Ok(Some(OrderProfile::Constant(*v))),
            Some(ProfileField::Text(s)) => {
                OrderProfile::parse(s)
                    .map(Some)
                    .map_err(|source| ConfigError::BadProfile {
                        field: name,
                        source,
                    })
            }
        }
    };
    let alpha = profile(raw.alpha.as_ref(), "alpha")?;
    let beta = profile(raw.beta.as_ref(), "beta")?;
    let lambda = profile(raw.lambda.as_ref(), "lambda")?;

    let require = |v: Option<OrderProfile>, field: &'static str| {
        v.ok_or(ConfigError::MissingField { class, field })
    };
    let forbid = |present: bool, field: &'static str| {
        if present {
            Err(ConfigError::ForbiddenField { class, field })
        } else {
            Ok(())
        }
    };
    let require_c = || raw.c.ok_or(ConfigError::MissingField { class, field: "c" });

    let spec = match class {
        VibratorClass::I => {
            forbid(raw.c.is_some(), "c")?;
            forbid(beta.is_some(), "beta")?;
            forbid(lambda.is_some(), "lambda")?;
            VibratorSpec::class_i(raw.m, raw.k, require(alpha, "alpha")?)?
        }
        VibratorClass::II => {
            forbid(alpha.is_some(), "alpha")?;
            forbid(lambda.is_some(), "lambda")?;
            VibratorSpec::class_ii(raw.m, require_c()?, raw.k, require(beta, "beta")?)?
        }
        VibratorClass::III => {
            forbid(lambda.is_some(), "lambda")?;
            VibratorSpec::class_iii(
                raw.m,
                require_c()?,
                raw.k,
                require(alpha, "alpha")?,
                require(beta, "beta")?,
            )?
        }
        VibratorClass::IV => {
            forbid(raw.c.is_some(), "c")?;
            forbid(beta.is_some(), "beta")?;
            VibratorSpec::class_iv(
                raw.m,
                raw.k,
                require(alpha, "alpha")?,
                require(lambda, "lambda")?,
            )?
        }
        VibratorClass::V => {
            forbid(raw.c.is_some(), "c")?;
            forbid(alpha.is_some(), "alpha")?;
            forbid(beta.is_some(), "beta")?;
            VibratorSpec::class_v(raw.m, raw.k, require(lambda, "lambda")?)?
        }
        VibratorClass::VI => VibratorSpec::class_vi(
            raw.m,
            require_c()?,
            raw.k,
            require(alpha, "alpha")?,
            require(beta, "beta")?,
            require(lambda, "lambda")?,
        )?,
    };

    let omega_grid = match &raw.omega {
        None => linspace(DEFAULT_OMEGA_MIN, DEFAULT_OMEGA_MAX, DEFAULT_OMEGA_COUNT),
        Some(o) => {
            if !(o.min.is_finite() && o.min > 0.0) {
                return Err(ConfigError::BadGrid(format!(
                    "omega.min must be > 0, got {}",
                    o.min
                )));
            }
            if !(o.max.is_finite() && o.max > o.min) {
                return Err(ConfigError::BadGrid(format!(
                    "omega.max must exceed omega.min, got {}",
                    o.max
                )));
            }
            if o.count < 2 {
                return Err(ConfigError::BadGrid(format!(
                    "omega.count must be at least 2, got {}",
                    o.count
                )));
            }
            match o.spacing.as_str() {
                "linear" => linspace(o.min, o.max, o.count),
                "log" => logspace(o.min, o.max, o.count),
                other => {
                    return Err(ConfigError::BadGrid(format!(
                        "omega.spacing must be `linear` or `log`, got `{other}`"
                    )))
                }
            }
        }
    };

    let time_grid = match &raw.time {
        None => linspace(0.0, DEFAULT_TIME_MAX, DEFAULT_TIME_COUNT),
        Some(t) => {
            if !(t.max.is_finite() && t.max > 0.0) {
                return Err(ConfigError::BadGrid(format!(
                    "time.max must be > 0, got {}",
                    t.max
                )));
            }
            if t.count < 2 {
                return Err(ConfigError::BadGrid(format!(
                    "time.count must be at least 2, got {}",
                    t.count
                )));
            }
            linspace(0.0, t.max, t.count)
        }
    };

    let response_omega = raw.response_omega.unwrap_or(DEFAULT_RESPONSE_OMEGA);
    if !(response_omega.is_finite() && response_omega > 0.0) {
        return Err(ConfigError::BadGrid(format!(
            "response_omega must be > 0, got {response_omega}"
        )));
    }

    Ok(SweepConfig {
        spec,
        omega_grid,
        response_omega,
        time_grid,
        initial: raw
            .initial
            .map(|i| InitialConditions { x0: i.x0, v0: i.v0 })
            .unwrap_or(InitialConditions { x0: 1.0, v0: 1.0 }),
        out: raw.out,
    })
}
