//! Library half of the `umbral` command: the function catalog, table
//! emission and the validation suites. `main.rs` only parses arguments.

pub mod catalog;
pub mod error;
pub mod output;
pub mod params;
pub mod table;
pub mod validate;

pub use error::{CliError, ExitStatus};
