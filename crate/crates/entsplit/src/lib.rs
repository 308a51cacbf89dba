//! File formats, parameter sweeps and report rendering on top of
//! [`entsplit_core`]. The `entsplit` binary is a thin clap front end over
//! this library.

pub mod error;
pub mod format;
pub mod report;
pub mod sweep;
pub mod transform_file;

pub use error::{CliError, ExitCode};
