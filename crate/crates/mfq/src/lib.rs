//! Command-line companion to the `macfarlane` crate: a text grammar for
//! quaternion literals, deterministic JSON reports, seeded verification
//! suites, and the `mfq` binary front end.
//!
//! The library surface exists primarily so integration tests can drive the
//! same code paths as the binary; see the individual modules for contracts.

pub mod cli;
pub mod commands;
pub mod config;
pub mod json;
pub mod parser;
pub mod verify;
