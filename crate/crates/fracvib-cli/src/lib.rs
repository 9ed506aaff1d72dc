//! Command implementations behind the `fracvib` binary: config ingestion,
//! parameter sweeps, figure-data regeneration, verification driving, and
//! CSV/SVG emission. The binary in `main.rs` is a thin argument parser over
//! these.

pub mod commands;
pub mod config;
pub mod csvout;
pub mod figures;
pub mod svg;
