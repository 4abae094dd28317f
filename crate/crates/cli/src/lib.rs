//! Support library for the `motzkin` binary: fixture ingestion and
//! diffing, the OEIS b-file client, and the output-mode plumbing.

pub mod fixtures;
pub mod oeis;
pub mod output;
