//! Batch verification harness: seeded trials of every identity suite,
//! JSON and text reports, and the `qid` exit-code contract.

pub mod config;
pub mod harness;
pub mod report;
pub mod suites;

pub use config::{parse_args, Format, Identity, SuiteConfig};
pub use harness::run_suite;
pub use report::{Report, Status, TrialRecord};
