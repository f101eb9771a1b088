//! Report building and input parsing behind the `tring` binary.
//!
//! Everything JSON is exact: integers of any size are emitted as JSON
//! number literals (never floats), rationals in input documents are
//! integers or `"p/q"` strings, and reports for identical inputs are
//! byte-identical.

pub mod input;
pub mod report;
