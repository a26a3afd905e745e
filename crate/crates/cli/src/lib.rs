//! Library surface of the CLI: file formats, command implementations and
//! the demo, reused by the binary, the tests and the fixture generator.

pub mod commands;
pub mod demo;
pub mod formats;
