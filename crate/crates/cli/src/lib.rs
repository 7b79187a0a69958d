//! Library side of the command-line frontend: report types and the
//! verification suites shared between the binary and the acceptance
//! test target.

pub mod report;
pub mod suites;
