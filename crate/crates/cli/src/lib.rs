//! Scenario configs, the group registry and report emission behind the
//! `cosetpack` binary.

pub mod config;
pub mod registry;
pub mod report;
pub mod scenarios;

pub use config::{parse_config, ConfigError, ScenarioConfig};
pub use report::{emit_report, Format, ReportRow, CSV_HEADER};
pub use scenarios::{certify_scenario, run_scenario, RunOptions, ScenarioError, ScenarioOutput, SCENARIOS};
