//! Batch interface to `gaussnet-core`: netfile parsing, parameter sweeps,
//! figure tables and CSV output.

pub mod error;
pub mod figure;
pub mod netfile;
pub mod sweep;
pub mod table;

pub use error::{CliError, Result};
pub use netfile::{parse_netfile, Bindings, Netfile};
pub use sweep::{run, sweep};
pub use table::Table;
