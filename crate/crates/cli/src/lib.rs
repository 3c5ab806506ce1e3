//! Command-line reports for the `hkcat` library.

pub mod app;
pub mod report;
pub mod spec;

pub use app::{run, Cli, CliError, Outcome};
pub use spec::{parse_group_spec, Family, GroupSpec, SpecError};
