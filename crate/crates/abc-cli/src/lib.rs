//! Library side of the `abc` command-line tool: run configuration and
//! hashing, the JSON-lines results store, parallel search drivers, CSV
//! report assembly, and the subcommand implementations.
//!
//! The binary in `main.rs` is a thin clap layer over [`commands`].

pub mod commands;
pub mod config;
pub mod report;
pub mod runner;
pub mod store;
