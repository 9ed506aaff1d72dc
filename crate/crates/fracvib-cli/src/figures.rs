//! Catalog of reference figure panels: the canonical parameter set behind
//! each plot, so the underlying sweep data can be regenerated as CSV.
//!
//! Ids follow the panel numbering (`3.1a` … `6.2b`). Multi-curve panels emit
//! one group of rows per curve, tagged in the leading `curve` column.
//!
//! Grid conventions:
//! * effective / restricted / rayleigh panels sweep 512 linear points on
//!   (0, 10] starting at 1e-3, the plots' visible range;
//! * transfer panels (5.3, 5.4) sweep (0, 2];
//! * panel 6.2b sweeps (0, 1] — its profile 2.99·exp(−ω) leaves the
//!   admissible inertia-order range above ω = ln 2.99 ≈ 1.095;
//! * response panels use t ∈ [0, 50] with 2001 samples, at ω = 1.1 for the
//!   fixed-frequency panels and at ω ∈ {0.2, 0.4, 0.6, 0.8} slices for the
//!   panels drawn over ω ∈ (0, 1).
//!
//! Rows where a restriction fails carry the status instead of values; a
//! failed response slice collapses to a single status row.

use fracvib::grid::linspace;
use fracvib::model::{OrderProfile, VibratorSpec};
use fracvib::response::{free_response_fn, impulse_response_fn, InitialConditions};

use crate::commands::{effective_fields, rayleigh_fields, restricted_fields, transfer_fields};
use crate::csvout::{status_of_error, CsvBuilder, STATUS_OK};

pub struct Curve {
    pub label: &'static str,
    pub spec: VibratorSpec,
}

pub enum PanelKind {
    Effective,
    Restricted,
    Transfer,
    Rayleigh,
    FreeResponse {
        omegas: Vec<f64>,
        ic: InitialConditions,
    },
    ImpulseResponse {
        omegas: Vec<f64>,
    },
}

pub struct Panel {
    pub id: &'static str,
    /// The column the figure itself plots, for the SVG convenience layer.
    pub featured: &'static str,
    pub kind: PanelKind,
    pub curves: Vec<Curve>,
    /// Frequency grid for sweep panels, time grid for response panels.
    pub grid: Vec<f64>,
}

pub const CATALOG_IDS: [&str; 45] = [
    "3.1a", "3.1b", "3.1c", "3.1d", "3.1e", "3.1f", "3.2a", "3.2b", "3.2c", "3.2d", "3.3a", "3.3b",
    "4.1a", "4.1b", "4.1c", "4.1d", "4.2a", "4.2b", "4.2c", "4.2d", "4.2e", "4.2f", "4.3a", "4.3b",
    "4.3c", "5.1a", "5.1b", "5.1c", "5.1d", "5.2a", "5.2b", "5.2c", "5.2d", "5.3a", "5.3b", "5.3c",
    "5.3d", "5.4a", "5.4b", "5.4c", "5.4d", "6.1a", "6.1b", "6.2a", "6.2b",
];

fn prof(text: &str) -> OrderProfile {
    OrderProfile::parse(text).expect("catalog profile parses")
}

fn cst(v: f64) -> OrderProfile {
    OrderProfile::Constant(v)
}

fn vi(m: f64, c: f64, k: f64, a: OrderProfile, b: OrderProfile, l: OrderProfile) -> VibratorSpec {
    VibratorSpec::class_vi(m, c, k, a, b, l).expect("catalog spec is admissible")
}

fn sweep_grid() -> Vec<f64> {
    linspace(1e-3, 10.0, 512)
}

fn transfer_grid() -> Vec<f64> {
    linspace(1e-3, 2.0, 512)
}

fn time_grid() -> Vec<f64> {
    linspace(0.0, 50.0, 2001)
}

/// Three constant-α curves sharing the other parameters.
fn alpha_family(
    alphas: [f64; 3],
    labels: [&'static str; 3],
    m: f64,
    c: f64,
    k: f64,
    beta: f64,
    lambda: f64,
) -> Vec<Curve> {
    alphas
        .into_iter()
        .zip(labels)
        .map(|(a, label)| Curve {
            label,
            spec: vi(m, c, k, cst(a), cst(beta), cst(lambda)),
        })
        .collect()
}

const LOW_ALPHAS: [f64; 3] = [1.3, 1.6, 1.9];
const LOW_LABELS: [&str; 3] = ["alpha=1.3", "alpha=1.6", "alpha=1.9"];
const HIGH_ALPHAS: [f64; 3] = [2.3, 2.6, 2.9];
const HIGH_LABELS: [&str; 3] = ["alpha=2.3", "alpha=2.6", "alpha=2.9"];

const ALPHA_SLOW: &str = "1.10 + 1.89*abs(cos(0.1*w))";
const BETA_SIN: &str = "1 + 0.99*abs(sin(w))";
const LAMBDA_COS: &str = "0.99*abs(cos(w))";
const LAMBDA_EXP: &str = "0.99*abs(exp(-w))";

/// Look up a panel by id.
pub fn panel(id: &str) -> Option<Panel> {
    let response_slices = vec![0.2, 0.4, 0.6, 0.8];
    let unit_ic = InitialConditions { x0: 1.0, v0: 1.0 };
    let variable_slow =
        |c: f64, lambda: &str| vi(1.0, c, 1.0, prof(ALPHA_SLOW), prof(BETA_SIN), prof(lambda));

    let panel = match id {
        // -- effective mass, m = c = k = 1 -----------------------------------
        "3.1a" => Panel {
            id: "3.1a",
            featured: "m_eff",
            kind: PanelKind::Effective,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 1.0, 1.0, 1.0, 0.0),
            grid: sweep_grid(),
        },
        "3.1b" => Panel {
            id: "3.1b",
            featured: "m_eff",
            kind: PanelKind::Effective,
            curves: alpha_family(HIGH_ALPHAS, HIGH_LABELS, 1.0, 1.0, 1.0, 1.0, 0.0),
            grid: sweep_grid(),
        },
        "3.1c" => Panel {
            id: "3.1c",
            featured: "m_eff",
            kind: PanelKind::Effective,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 1.0, 1.0, 1.3, 0.0),
            grid: sweep_grid(),
        },
        "3.1d" => Panel {
            id: "3.1d",
            featured: "m_eff",
            kind: PanelKind::Effective,
            curves: alpha_family(HIGH_ALPHAS, HIGH_LABELS, 1.0, 1.0, 1.0, 1.3, 0.0),
            grid: sweep_grid(),
        },
        "3.1e" => Panel {
            id: "3.1e",
            featured: "m_eff",
            kind: PanelKind::Effective,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 1.0, 1.0, 0.9, 0.0),
            grid: sweep_grid(),
        },
        "3.1f" => Panel {
            id: "3.1f",
            featured: "m_eff",
            kind: PanelKind::Effective,
            curves: vec![Curve {
                label: "variable",
                spec: vi(
                    1.0,
                    1.0,
                    1.0,
                    prof("1.10 + 1.89*abs(sin(w))"),
                    prof("1 + 0.99*abs(cos(w))"),
                    cst(0.0),
                ),
            }],
            grid: sweep_grid(),
        },

        // -- effective damping, m = c = k = 1 --------------------------------
        "3.2a" => Panel {
            id: "3.2a",
            featured: "c_eff",
            kind: PanelKind::Effective,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 1.0, 1.0, 0.3, 0.3),
            grid: sweep_grid(),
        },
        "3.2b" => Panel {
            id: "3.2b",
            featured: "c_eff",
            kind: PanelKind::Effective,
            curves: alpha_family(HIGH_ALPHAS, HIGH_LABELS, 1.0, 1.0, 1.0, 0.3, 0.3),
            grid: sweep_grid(),
        },
        "3.2c" => Panel {
            id: "3.2c",
            featured: "c_eff",
            kind: PanelKind::Effective,
            curves: vec![Curve {
                label: "variable",
                spec: vi(
                    1.0,
                    1.0,
                    1.0,
                    prof("1.10 + 1.89*abs(cos(0.5*w))"),
                    prof(BETA_SIN),
                    prof("0.99*abs(sin(w))"),
                ),
            }],
            grid: sweep_grid(),
        },
        "3.2d" => Panel {
            id: "3.2d",
            featured: "c_eff",
            kind: PanelKind::Effective,
            curves: vec![
                Curve {
                    label: "alpha=1.3",
                    spec: vi(1.0, 1.0, 1.0, cst(1.3), prof(BETA_SIN), prof(LAMBDA_COS)),
                },
                Curve {
                    label: "alpha=2.3",
                    spec: vi(1.0, 1.0, 1.0, cst(2.3), prof(BETA_SIN), prof(LAMBDA_COS)),
                },
            ],
            grid: sweep_grid(),
        },

        // -- effective stiffness, k = 1 (class V: no damping force) ----------
        "3.3a" => Panel {
            id: "3.3a",
            featured: "k_eff",
            kind: PanelKind::Effective,
            curves: [0.3, 0.6, 0.9]
                .into_iter()
                .zip(["lambda=0.3", "lambda=0.6", "lambda=0.9"])
                .map(|(l, label)| Curve {
                    label,
                    spec: VibratorSpec::class_v(1.0, 1.0, cst(l)).expect("admissible"),
                })
                .collect(),
            grid: sweep_grid(),
        },
        "3.3b" => Panel {
            id: "3.3b",
            featured: "k_eff",
            kind: PanelKind::Effective,
            curves: vec![Curve {
                label: "variable",
                spec: VibratorSpec::class_v(1.0, 1.0, prof(LAMBDA_COS)).expect("admissible"),
            }],
            grid: sweep_grid(),
        },

        // -- damping ratio, m = c = k = 1 -------------------------------------
        "4.1a" => Panel {
            id: "4.1a",
            featured: "zeta_eff",
            kind: PanelKind::Restricted,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 1.0, 1.0, 0.3, 0.3),
            grid: sweep_grid(),
        },
        "4.1b" => Panel {
            id: "4.1b",
            featured: "zeta_eff",
            kind: PanelKind::Restricted,
            curves: alpha_family(HIGH_ALPHAS, HIGH_LABELS, 1.0, 1.0, 1.0, 1.9, 0.3),
            grid: sweep_grid(),
        },
        "4.1c" => Panel {
            id: "4.1c",
            featured: "zeta_eff",
            kind: PanelKind::Restricted,
            curves: vec![Curve {
                label: "variable",
                spec: vi(
                    1.0,
                    1.0,
                    1.0,
                    prof(ALPHA_SLOW),
                    prof(BETA_SIN),
                    prof(LAMBDA_COS),
                ),
            }],
            grid: sweep_grid(),
        },
        "4.1d" => Panel {
            id: "4.1d",
            featured: "zeta_eff",
            kind: PanelKind::Restricted,
            curves: vec![Curve {
                label: "variable",
                spec: vi(
                    1.0,
                    1.0,
                    1.0,
                    prof(ALPHA_SLOW),
                    prof(BETA_SIN),
                    prof(LAMBDA_EXP),
                ),
            }],
            grid: sweep_grid(),
        },

        // -- damping-free natural frequency, m = 1, k = 1, c = 0.2 ------------
        "4.2a" => Panel {
            id: "4.2a",
            featured: "omega_effn",
            kind: PanelKind::Restricted,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 0.2, 1.0, 0.3, 0.3),
            grid: sweep_grid(),
        },
        "4.2b" => Panel {
            id: "4.2b",
            featured: "omega_effn",
            kind: PanelKind::Restricted,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 0.2, 1.0, 1.3, 0.3),
            grid: sweep_grid(),
        },
        "4.2c" => Panel {
            id: "4.2c",
            featured: "omega_effn",
            kind: PanelKind::Restricted,
            curves: alpha_family(HIGH_ALPHAS, HIGH_LABELS, 1.0, 0.2, 1.0, 0.3, 0.3),
            grid: sweep_grid(),
        },
        "4.2d" => Panel {
            id: "4.2d",
            featured: "omega_effn",
            kind: PanelKind::Restricted,
            curves: alpha_family(HIGH_ALPHAS, HIGH_LABELS, 1.0, 0.2, 1.0, 1.3, 0.3),
            grid: sweep_grid(),
        },
        "4.2e" => Panel {
            id: "4.2e",
            featured: "omega_effn",
            kind: PanelKind::Restricted,
            curves: vec![Curve {
                label: "variable",
                spec: variable_slow(0.2, LAMBDA_COS),
            }],
            grid: sweep_grid(),
        },
        "4.2f" => Panel {
            id: "4.2f",
            featured: "omega_effn",
            kind: PanelKind::Restricted,
            curves: vec![Curve {
                label: "variable",
                spec: variable_slow(0.2, LAMBDA_EXP),
            }],
            grid: sweep_grid(),
        },

        // -- frequency ratio, m = 1, k = 1, c = 0.2 ---------------------------
        "4.3a" => Panel {
            id: "4.3a",
            featured: "gamma_eff",
            kind: PanelKind::Restricted,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 0.2, 1.0, 0.3, 0.3),
            grid: sweep_grid(),
        },
        "4.3b" => Panel {
            id: "4.3b",
            featured: "gamma_eff",
            kind: PanelKind::Restricted,
            curves: alpha_family(HIGH_ALPHAS, HIGH_LABELS, 1.0, 0.2, 1.0, 0.3, 0.3),
            grid: sweep_grid(),
        },
        "4.3c" => Panel {
            id: "4.3c",
            featured: "gamma_eff",
            kind: PanelKind::Restricted,
            curves: vec![Curve {
                label: "variable",
                spec: variable_slow(0.2, LAMBDA_COS),
            }],
            grid: sweep_grid(),
        },

        // -- free responses, x0 = v0 = 1, m = k = 1 ---------------------------
        "5.1a" => Panel {
            id: "5.1a",
            featured: "x",
            kind: PanelKind::FreeResponse {
                omegas: vec![1.1],
                ic: unit_ic,
            },
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 0.2, 1.0, 0.3, 0.3),
            grid: time_grid(),
        },
        "5.1b" => Panel {
            id: "5.1b",
            featured: "x",
            kind: PanelKind::FreeResponse {
                omegas: vec![1.1],
                ic: unit_ic,
            },
            curves: vec![Curve {
                label: "alpha=2.4",
                spec: vi(1.0, 0.2, 1.0, cst(2.4), cst(1.9), cst(0.3)),
            }],
            grid: time_grid(),
        },
        "5.1c" => Panel {
            id: "5.1c",
            featured: "x",
            kind: PanelKind::FreeResponse {
                omegas: response_slices.clone(),
                ic: unit_ic,
            },
            curves: vec![Curve {
                label: "variable",
                spec: variable_slow(0.2, LAMBDA_COS),
            }],
            grid: time_grid(),
        },
        "5.1d" => Panel {
            id: "5.1d",
            featured: "x",
            kind: PanelKind::FreeResponse {
                omegas: response_slices.clone(),
                ic: unit_ic,
            },
            curves: vec![Curve {
                label: "variable",
                spec: variable_slow(1.2, LAMBDA_COS),
            }],
            grid: time_grid(),
        },

        // -- impulse responses, m = k = 1 -------------------------------------
        "5.2a" => Panel {
            id: "5.2a",
            featured: "h",
            kind: PanelKind::ImpulseResponse { omegas: vec![1.1] },
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 0.2, 1.0, 0.3, 0.3),
            grid: time_grid(),
        },
        "5.2b" => Panel {
            id: "5.2b",
            featured: "h",
            kind: PanelKind::ImpulseResponse { omegas: vec![1.1] },
            curves: vec![Curve {
                label: "alpha=2.5",
                spec: vi(1.0, 0.2, 1.0, cst(2.5), cst(1.5), cst(0.3)),
            }],
            grid: time_grid(),
        },
        "5.2c" => Panel {
            id: "5.2c",
            featured: "h",
            kind: PanelKind::ImpulseResponse {
                omegas: response_slices.clone(),
            },
            curves: vec![Curve {
                label: "variable",
                spec: variable_slow(0.2, LAMBDA_COS),
            }],
            grid: time_grid(),
        },
        "5.2d" => Panel {
            id: "5.2d",
            featured: "h",
            kind: PanelKind::ImpulseResponse {
                omegas: response_slices,
            },
            curves: vec![Curve {
                label: "variable",
                spec: variable_slow(1.2, LAMBDA_COS),
            }],
            grid: time_grid(),
        },

        // -- transfer amplitude / phase, m = k = 1, sweep (0, 2] --------------
        "5.3a" | "5.4a" => Panel {
            id: if id == "5.3a" { "5.3a" } else { "5.4a" },
            featured: if id == "5.3a" { "amplitude" } else { "phase" },
            kind: PanelKind::Transfer,
            curves: alpha_family(LOW_ALPHAS, LOW_LABELS, 1.0, 0.2, 1.0, 1.3, 0.3),
            grid: transfer_grid(),
        },
        "5.3b" | "5.4b" => Panel {
            id: if id == "5.3b" { "5.3b" } else { "5.4b" },
            featured: if id == "5.3b" { "amplitude" } else { "phase" },
            kind: PanelKind::Transfer,
            curves: alpha_family(HIGH_ALPHAS, HIGH_LABELS, 1.0, 0.2, 1.0, 1.3, 0.3),
            grid: transfer_grid(),
        },
        "5.3c" | "5.4c" => Panel {
            id: if id == "5.3c" { "5.3c" } else { "5.4c" },
            featured: if id == "5.3c" { "amplitude" } else { "phase" },
            kind: PanelKind::Transfer,
            curves: vec![Curve {
                label: "variable",
                spec: vi(
                    1.0,
                    0.2,
                    1.0,
                    prof("1.10 + 1.89*abs(cos(w))"),
                    prof(BETA_SIN),
                    prof(LAMBDA_COS),
                ),
            }],
            grid: transfer_grid(),
        },
        "5.3d" | "5.4d" => Panel {
            id: if id == "5.3d" { "5.3d" } else { "5.4d" },
            featured: if id == "5.3d" { "amplitude" } else { "phase" },
            kind: PanelKind::Transfer,
            curves: vec![Curve {
                label: "variable",
                spec: vi(
                    1.0,
                    1.2,
                    1.0,
                    prof("1.10 + 1.89*abs(cos(w))"),
                    prof(BETA_SIN),
                    prof(LAMBDA_COS),
                ),
            }],
            grid: transfer_grid(),
        },

        // -- Rayleigh decomposition, m = k = 1, c = 0 --------------------------
        "6.1a" | "6.1b" | "6.2a" => Panel {
            id: match id {
                "6.1a" => "6.1a",
                "6.1b" => "6.1b",
                _ => "6.2a",
            },
            featured: match id {
                "6.1a" => "a",
                "6.1b" => "b",
                _ => "c_gray",
            },
            kind: PanelKind::Rayleigh,
            curves: vec![Curve {
                label: "variable",
                spec: VibratorSpec::class_iv(
                    1.0,
                    1.0,
                    prof("1.80 + 1.19*abs(sin(w))"),
                    prof(LAMBDA_COS),
                )
                .expect("admissible"),
            }],
            grid: sweep_grid(),
        },
        "6.2b" => Panel {
            id: "6.2b",
            featured: "c_gray",
            kind: PanelKind::Rayleigh,
            curves: vec![Curve {
                label: "variable",
                spec: VibratorSpec::class_iv(1.0, 1.0, prof("2.99*exp(-w)"), prof(LAMBDA_COS))
                    .expect("admissible"),
            }],
            // 2.99·exp(−ω) stays inside (1, 3) only below ω = ln 2.99
            grid: linspace(1e-3, 1.0, 512),
        },
        _ => return None,
    };
    Some(panel)
}

/// Render a panel's sweep data as CSV.
pub fn render(panel: &Panel) -> String {
    match &panel.kind {
        PanelKind::Effective => {
            let mut csv = CsvBuilder::new(&[
                "curve", "omega", "alpha", "beta", "lambda", "m_eff", "c_eff", "k_eff", "status",
            ]);
            for curve in &panel.curves {
                for &omega in &panel.grid {
                    csv.str_field(curve.label).f64_field(omega);
                    effective_fields(&mut csv, &curve.spec, omega);
                    csv.end_row();
                }
            }
            csv.finish()
        }
        PanelKind::Restricted => {
            let mut csv = CsvBuilder::new(&[
                "curve",
                "omega",
                "zeta_eff",
                "omega_effn",
                "omega_effd",
                "gamma_eff",
                "status",
            ]);
            for curve in &panel.curves {
                for &omega in &panel.grid {
                    csv.str_field(curve.label).f64_field(omega);
                    restricted_fields(&mut csv, &curve.spec, omega);
                    csv.end_row();
                }
            }
            csv.finish()
        }
        PanelKind::Transfer => {
            let mut csv = CsvBuilder::new(&[
                "curve",
                "omega",
                "re_H",
                "im_H",
                "amplitude",
                "phase",
                "status",
            ]);
            for curve in &panel.curves {
                for &omega in &panel.grid {
                    csv.str_field(curve.label).f64_field(omega);
                    transfer_fields(&mut csv, &curve.spec, omega);
                    csv.end_row();
                }
            }
            csv.finish()
        }
        PanelKind::Rayleigh => {
            let mut csv = CsvBuilder::new(&["curve", "omega", "a", "b", "c_gray", "status"]);
            for curve in &panel.curves {
                for &omega in &panel.grid {
                    csv.str_field(curve.label).f64_field(omega);
                    rayleigh_fields(&mut csv, &curve.spec, omega);
                    csv.end_row();
                }
            }
            csv.finish()
        }
        PanelKind::FreeResponse { omegas, ic } => {
            let mut csv = CsvBuilder::new(&["curve", "omega", "t", "x", "status"]);
            for curve in &panel.curves {
                for &omega in omegas {
                    match free_response_fn(&curve.spec, omega, *ic) {
                        Ok(x) => {
                            for &t in &panel.grid {
                                csv.str_field(curve.label)
                                    .f64_field(omega)
                                    .f64_field(t)
                                    .f64_field(x(t))
                                    .str_field(STATUS_OK);
                                csv.end_row();
                            }
                        }
                        Err(e) => {
                            csv.str_field(curve.label)
                                .f64_field(omega)
                                .opt_field(None)
                                .opt_field(None)
                                .str_field(status_of_error(&e));
                            csv.end_row();
                        }
                    }
                }
            }
            csv.finish()
        }
        PanelKind::ImpulseResponse { omegas } => {
            let mut csv = CsvBuilder::new(&["curve", "omega", "t", "h", "status"]);
            for curve in &panel.curves {
                for &omega in omegas {
                    match impulse_response_fn(&curve.spec, omega) {
                        Ok(h) => {
                            for &t in &panel.grid {
                                csv.str_field(curve.label)
                                    .f64_field(omega)
                                    .f64_field(t)
                                    .f64_field(h(t))
                                    .str_field(STATUS_OK);
                                csv.end_row();
                            }
                        }
                        Err(e) => {
                            csv.str_field(curve.label)
                                .f64_field(omega)
                                .opt_field(None)
                                .opt_field(None)
                                .str_field(status_of_error(&e));
                            csv.end_row();
                        }
                    }
                }
            }
            csv.finish()
        }
    }
}

/// The distinct variable-order profile sets that appear in the panel
/// catalog, each with its panel coefficients and a grid on which the orders
/// stay admissible. Used by the verification suite to exercise the spectral
/// identity on every cataloged profile family.
pub struct IdentityCase {
    pub label: &'static str,
    pub spec: VibratorSpec,
    pub grid: Vec<f64>,
}

pub fn panel_identity_cases() -> Vec<IdentityCase> {
    let case = |label, spec| IdentityCase {
        label,
        spec,
        grid: sweep_grid(),
    };
    vec![
        case(
            "mass panel profiles",
            vi(
                1.0,
                1.0,
                1.0,
                prof("1.10 + 1.89*abs(sin(w))"),
                prof("1 + 0.99*abs(cos(w))"),
                cst(0.0),
            ),
        ),
        case(
            "damping panel profiles",
            vi(
                1.0,
                1.0,
                1.0,
                prof("1.10 + 1.89*abs(cos(0.5*w))"),
                prof(BETA_SIN),
                prof("0.99*abs(sin(w))"),
            ),
        ),
        case(
            "damping panel, low constant inertia order",
            vi(1.0, 1.0, 1.0, cst(1.3), prof(BETA_SIN), prof(LAMBDA_COS)),
        ),
        case(
            "damping panel, high constant inertia order",
            vi(1.0, 1.0, 1.0, cst(2.3), prof(BETA_SIN), prof(LAMBDA_COS)),
        ),
        case(
            "stiffness panel profile",
            VibratorSpec::class_v(1.0, 1.0, prof(LAMBDA_COS))
                .expect("admissible")
                .canonicalize(),
        ),
        case(
            "restricted panels, cosine restoration order",
            vi(
                1.0,
                1.0,
                1.0,
                prof(ALPHA_SLOW),
                prof(BETA_SIN),
                prof(LAMBDA_COS),
            ),
        ),
        case(
            "restricted panels, exponential restoration order",
            vi(
                1.0,
                1.0,
                1.0,
                prof(ALPHA_SLOW),
                prof(BETA_SIN),
                prof(LAMBDA_EXP),
            ),
        ),
        case(
            "transfer panel profiles",
            vi(
                1.0,
                0.2,
                1.0,
                prof("1.10 + 1.89*abs(cos(w))"),
                prof(BETA_SIN),
                prof(LAMBDA_COS),
            ),
        ),
        case(
            "Rayleigh panel profiles",
            VibratorSpec::class_iv(1.0, 1.0, prof("1.80 + 1.19*abs(sin(w))"), prof(LAMBDA_COS))
                .expect("admissible")
                .canonicalize(),
        ),
        IdentityCase {
            label: "Rayleigh panel, decaying inertia order",
            spec: VibratorSpec::class_iv(1.0, 1.0, prof("2.99*exp(-w)"), prof(LAMBDA_COS))
                .expect("admissible")
                .canonicalize(),
            grid: linspace(1e-3, 1.0, 512),
        },
    ]
}
