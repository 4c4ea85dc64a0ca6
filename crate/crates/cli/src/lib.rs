//! Command-line surface over the phibase library: conversions between
//! integers and base-φ digit strings, regeneration of the expansion tables,
//! and batch verification sweeps with machine-readable reports.

pub mod reference;
pub mod report;
pub mod table;
pub mod verify;
