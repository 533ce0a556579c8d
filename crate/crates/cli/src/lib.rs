//! File formats, reports, a threaded executor and the command line for
//! `antiramsey-core`.

pub mod cli;
pub mod format;
pub mod manifest;
pub mod parallel;
pub mod report;
