//! Library side of the command-line harness: census configuration, the
//! census runner, and the report schema. The `matchext` binary in this
//! package is a thin wrapper over these modules and the core crate.

#![forbid(unsafe_code)]

pub mod census;
pub mod config;
pub mod report;
