//! Command implementations behind the `invol` binary. Each `cmd_*` returns a
//! structured report; rendering and exit codes are left to the caller.

pub mod commands;
pub mod error;
pub mod report;
pub mod search;

pub use commands::{cmd_construct, cmd_family, cmd_field, cmd_verify, family_list, ConstructRequest, SigmaSpec};
pub use error::{CliError, CliResult, ExitStatus};
pub use report::{OracleMode, OracleOptions, RunReport};
pub use search::{cmd_search, SearchOptions, SearchResult};
