//! Front end for the Bernstein algebra toolkit: file formats, element specs
//! and the analysis commands behind the `bernstein` binary.

pub mod commands;
pub mod error;
pub mod files;
pub mod spec;

pub use commands::Report;
pub use error::{CliError, CliResult};
pub use files::{AlgebraFile, PresentationFile};
