//! Matrix file format and trace rendering behind the `lti-bounded` binary.

pub mod matrix_file;
pub mod trace;

pub use matrix_file::{format_matrix_file, parse_matrix_file, ParseError};
