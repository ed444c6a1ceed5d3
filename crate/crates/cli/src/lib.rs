//! Library backing the `qg` binary: operand parsing and the command
//! implementations, exposed so integration tests can drive them directly.

pub mod commands;
pub mod input;

pub use input::{parse_operand, Operand};
