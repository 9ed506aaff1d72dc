//! Deterministic CSV assembly.
//!
//! Byte determinism for a given (config, version): fixed column order, header
//! row first, LF line endings, floats in Rust's shortest round-trip decimal
//! form, undefined values as empty fields beside a `status` column (never
//! NaN literals).

use fracvib::error::Error;
use fracvib::model::OrderKind;

pub struct CsvBuilder {
    buf: String,
    columns: usize,
    in_row: usize,
}

impl CsvBuilder {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = String::new();
        buf.push_str(&header.join(","));
        buf.push('\n');
        CsvBuilder {
            buf,
            columns: header.len(),
            in_row: 0,
        }
    }

    fn sep(&mut self) {
        if self.in_row > 0 {
            self.buf.push(',');
        }
        self.in_row += 1;
    }

    pub fn str_field(&mut self, s: &str) -> &mut Self {
        debug_assert!(!s.contains(',') && !s.contains('\n'), "field needs quoting");
        self.sep();
        self.buf.push_str(s);
        self
    }

    pub fn f64_field(&mut self, v: f64) -> &mut Self {
        debug_assert!(v.is_finite(), "non-finite values must be empty fields");
        self.sep();
        // normalize -0.0 so zeros always print as "0"
        self.buf.push_str(&format!("{}", v + 0.0));
        self
    }

    pub fn opt_field(&mut self, v: Option<f64>) -> &mut Self {
        match v {
            Some(v) => self.f64_field(v),
            None => {
                self.sep();
                self
            }
        }
    }

    pub fn end_row(&mut self) {
        debug_assert_eq!(self.in_row, self.columns, "row width mismatch");
        self.buf.push('\n');
        self.in_row = 0;
    }

    pub fn finish(self) -> String {
        debug_assert_eq!(self.in_row, 0, "unterminated row");
        self.buf
    }
}

/// Status-column vocabulary for sweep rows.
pub fn status_of_error(e: &Error) -> &'static str {
    match e {
        Error::OrderOutOfRange {
            order: OrderKind::Alpha,
            ..
        } => "AlphaOutOfRange",
        Error::OrderOutOfRange {
            order: OrderKind::Beta,
            ..
        } => "BetaOutOfRange",
        Error::OrderOutOfRange {
            order: OrderKind::Lambda,
            ..
        } => "LambdaOutOfRange",
        Error::NonFiniteOrder { .. } => "NonFiniteOrder",
        Error::MassNonPositive { .. } => "MassNonPositive",
        Error::OverCritical { .. } => "OverCritical",
        Error::StiffnessZero { .. } => "StiffnessZero",
        Error::ResonanceSingular { .. } => "ResonanceSingular",
        Error::NonPositiveFrequency { .. } => "NonPositiveFrequency",
        Error::NonzeroPrimaryDamping { .. } => "NonzeroPrimaryDamping",
    }
}

pub const STATUS_OK: &str = "OK";
