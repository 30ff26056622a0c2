//! File formats, report rendering and the command-line front end for
//! [`franklin_core`].

pub mod cli;
pub mod report;
pub mod serdes;

pub use serdes::{emit, parse, FormatKind, ParseError};
