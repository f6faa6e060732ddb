//! Command-line companion to `lct-core`: JSON formats and the suite
//! runner backing the `lct-kit` binary.

pub mod formats;
pub mod runner;
