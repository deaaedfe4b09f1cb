//! Expression parsing for the `downup` binary, exposed as a library so the
//! test suites can drive the same grammar.

pub mod parse;
