//! The CLI operations: sweeps over a frequency grid, fixed-frequency time
//! responses, figure-data regeneration, and verification.
//!
//! Each sweep emits one CSV row per grid frequency. Rows where an order
//! profile leaves its admissible range, or where an engineering restriction
//! fails, carry the reason in the `status` column and leave the affected
//! value fields empty.

use thiserror::Error;

use fracvib::effective::effective_params;
use fracvib::model::VibratorSpec;
use fracvib::rayleigh::rayleigh_coefficients;
use fracvib::response::{free_response, impulse_response, transfer_function};
use fracvib::restricted::restricted_params;
use fracvib::verify::{default_verification, VerificationReport};

use crate::config::SweepConfig;
use crate::csvout::{status_of_error, CsvBuilder, STATUS_OK};
use crate::figures;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Config(#[from] crate::config::ConfigError),
    #[error("response restrictions fail at omega = {omega}: {status}")]
    Restriction { omega: f64, status: &'static str },
    #[error("unknown figure id `{0}` (see the catalog in the README)")]
    UnknownFigureId(String),
}

/// Evaluated order values for a row, even when one of them is the cause of a
/// range violation; `None` only when the profile itself blew up.
fn order_fields(spec: &VibratorSpec, omega: f64) -> (Option<f64>, Option<f64>, Option<f64>) {
    let finite = |v: f64| v.is_finite().then_some(v);
    (
        spec.orders().alpha.eval(omega).and_then(finite),
        spec.orders().beta.eval(omega).and_then(finite),
        spec.orders().lambda.eval(omega).and_then(finite),
    )
}

/// Write the alpha..status fields of an effective-parameter row (everything
/// after the leading omega / curve columns).
pub(crate) fn effective_fields(csv: &mut CsvBuilder, spec: &VibratorSpec, omega: f64) {
    match effective_params(spec, omega) {
        Ok(ep) => {
            let ov = spec.orders_at(omega).expect("params computed");
            csv.f64_field(ov.alpha)
                .f64_field(ov.beta)
                .f64_field(ov.lambda)
                .f64_field(ep.mass)
                .f64_field(ep.damping)
                .f64_field(ep.stiffness)
                .str_field(STATUS_OK);
        }
        Err(e) => {
            let (a, b, l) = order_fields(spec, omega);
            csv.opt_field(a)
                .opt_field(b)
                .opt_field(l)
                .opt_field(None)
                .opt_field(None)
                .opt_field(None)
                .str_field(status_of_error(&e));
        }
    }
}

pub(crate) fn restricted_fields(csv: &mut CsvBuilder, spec: &VibratorSpec, omega: f64) {
    match restricted_params(spec, omega) {
        Ok(rp) => {
            csv.opt_field(rp.zeta_eff)
                .opt_field(rp.omega_effn)
                .opt_field(rp.omega_effd)
                .opt_field(rp.gamma_eff)
                .str_field(&rp.status.to_string());
        }
        Err(e) => {
            csv.opt_field(None)
                .opt_field(None)
                .opt_field(None)
                .opt_field(None)
                .str_field(status_of_error(&e));
        }
    }
}

pub(crate) fn transfer_fields(csv: &mut CsvBuilder, spec: &VibratorSpec, omega: f64) {
    match transfer_function(spec, omega) {
        Ok(p) => {
            csv.f64_field(p.h.re)
                .f64_field(p.h.im)
                .f64_field(p.amplitude)
                .f64_field(p.phase)
                .str_field(STATUS_OK);
        }
        Err(e) => {
            csv.opt_field(None)
                .opt_field(None)
                .opt_field(None)
                .opt_field(None)
                .str_field(status_of_error(&e));
        }
    }
}

pub(crate) fn rayleigh_fields(csv: &mut CsvBuilder, spec: &VibratorSpec, omega: f64) {
    match rayleigh_coefficients(spec, omega) {
        Ok(d) => {
            csv.f64_field(d.a)
                .f64_field(d.b)
                .f64_field(d.c_gray)
                .str_field(STATUS_OK);
        }
        Err(e) => {
            csv.opt_field(None)
                .opt_field(None)
                .opt_field(None)
                .str_field(status_of_error(&e));
        }
    }
}

pub const EFFECTIVE_HEADER: [&str; 8] = [
    "omega", "alpha", "beta", "lambda", "m_eff", "c_eff", "k_eff", "status",
];
pub const RESTRICTED_HEADER: [&str; 6] = [
    "omega",
    "zeta_eff",
    "omega_effn",
    "omega_effd",
    "gamma_eff",
    "status",
];
pub const TRANSFER_HEADER: [&str; 6] = ["omega", "re_H", "im_H", "amplitude", "phase", "status"];
pub const RAYLEIGH_HEADER: [&str; 5] = ["omega", "a", "b", "c_gray", "status"];

/// Effective-parameter sweep: one row per grid frequency.
pub fn cmd_effective(cfg: &SweepConfig) -> String {
    let mut csv = CsvBuilder::new(&EFFECTIVE_HEADER);
    for &omega in &cfg.omega_grid {
        csv.f64_field(omega);
        effective_fields(&mut csv, &cfg.spec, omega);
        csv.end_row();
    }
    csv.finish()
}

/// Restricted-parameter sweep.
pub fn cmd_restricted(cfg: &SweepConfig) -> String {
    let mut csv = CsvBuilder::new(&RESTRICTED_HEADER);
    for &omega in &cfg.omega_grid {
        csv.f64_field(omega);
        restricted_fields(&mut csv, &cfg.spec, omega);
        csv.end_row();
    }
    csv.finish()
}

/// Transfer-function sweep.
pub fn cmd_transfer(cfg: &SweepConfig) -> String {
    let mut csv = CsvBuilder::new(&TRANSFER_HEADER);
    for &omega in &cfg.omega_grid {
        csv.f64_field(omega);
        transfer_fields(&mut csv, &cfg.spec, omega);
        csv.end_row();
    }
    csv.finish()
}

/// Rayleigh-decomposition sweep (requires a zero-damping spec).
pub fn cmd_rayleigh(cfg: &SweepConfig) -> String {
    let mut csv = CsvBuilder::new(&RAYLEIGH_HEADER);
    for &omega in &cfg.omega_grid {
        csv.f64_field(omega);
        rayleigh_fields(&mut csv, &cfg.spec, omega);
        csv.end_row();
    }
    csv.finish()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResponseKind {
    Free,
    Impulse,
}

/// Time response at the config's fixed `response_omega`. Refuses with the
/// restriction status when the response is undefined there.
pub fn cmd_response(cfg: &SweepConfig, kind: ResponseKind) -> Result<String, CommandError> {
    let omega = cfg.response_omega;
    let map_err = |e: fracvib::Error| CommandError::Restriction {
        omega,
        status: status_of_error(&e),
    };
    let (value_column, series) = match kind {
        ResponseKind::Free => (
            "x",
            free_response(&cfg.spec, omega, cfg.initial, &cfg.time_grid).map_err(map_err)?,
        ),
        ResponseKind::Impulse => (
            "h",
            impulse_response(&cfg.spec, omega, &cfg.time_grid).map_err(map_err)?,
        ),
    };
    let mut csv = CsvBuilder::new(&["t", value_column]);
    for (t, v) in &series.samples {
        csv.f64_field(*t).f64_field(*v);
        csv.end_row();
    }
    Ok(csv.finish())
}

/// Regenerate the sweep data underlying a cataloged figure panel.
pub fn cmd_figure(id: &str) -> Result<String, CommandError> {
    let panel = figures::panel(id).ok_or_else(|| CommandError::UnknownFigureId(id.into()))?;
    Ok(figures::render(&panel))
}

pub struct VerifyOutcome {
    pub reports: Vec<VerificationReport>,
    pub pass: bool,
}

/// Run all four verification families with their default grids.
pub fn cmd_verify(seed: u64) -> VerifyOutcome {
    let reports = default_verification(seed);
    let pass = reports.iter().all(|r| r.pass);
    VerifyOutcome { reports, pass }
}

/// Flatten verification reports to CSV: one row per record.
pub fn verify_report_csv(reports: &[VerificationReport]) -> String {
    let mut csv = CsvBuilder::new(&["check", "record", "error", "threshold", "pass"]);
    for report in reports {
        for record in &report.records {
            csv.str_field(&report.name.replace(',', ";"))
                .str_field(&record.label.replace(',', ";"))
                .f64_field(record.error)
                .f64_field(record.threshold)
                .str_field(if record.pass { "true" } else { "false" });
            csv.end_row();
        }
    }
    csv.finish()
}

/// The same reports as a JSON document.
pub fn verify_report_json(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}
