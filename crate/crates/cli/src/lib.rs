//! Library side of the `kcell` command: file formats, report formatting,
//! SVG rendering and the subcommands themselves.

pub mod commands;
pub mod error;
pub mod files;
pub mod format;
pub mod svg;

pub use commands::{
    cmd_cell, cmd_check, cmd_classify, cmd_construct, cmd_diagram, cmd_verify, ConstructRequest,
    DiagramRequest, Predicate, Report, VerifyRequest,
};
pub use error::{CliError, CliResult};
