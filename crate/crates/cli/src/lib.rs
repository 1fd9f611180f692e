//! Library face of the `chainsaw` command-line tool: argument types in
//! [`args`], execution and rendering in [`exec`]. The binary is a thin
//! wrapper so the whole surface stays testable in-process.

pub mod args;
pub mod exec;

pub use args::{Cli, Command};
pub use exec::{execute, Execution};
