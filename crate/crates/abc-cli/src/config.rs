//! Run configuration and its content hash.
//!
//! Every record written to the results store carries the SHA-256 of the
//! configuration that produced it, so reports can tell apart records from
//! different tolerance or worker regimes without trusting file order.

use std::fmt;
use std::path::PathBuf;

use abc_trees::ABC_EQ_TOL;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

/// Everything that determines a run's output. Optional fields stay in the
/// serialization (as null) so the hashed shape never depends on which
/// flags were given.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub n: Option<usize>,
    pub range: Option<(usize, usize)>,
    pub degrees: Option<Vec<usize>>,
    pub tol: f64,
    pub jobs: usize,
    pub format: OutputFormat,
    pub seed: u64,
    pub force: bool,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: &str) -> RunConfig {
        RunConfig {
            command: command.to_string(),
            n: None,
            range: None,
            degrees: None,
            tol: ABC_EQ_TOL,
            jobs: 1,
            format: OutputFormat::Text,
            seed: 0,
            force: false,
            out: None,
        }
    }

    /// SHA-256 of the canonical JSON serialization, as lowercase hex.
    /// Struct fields serialize in declaration order, so equal configs
    /// hash equal and any changed knob changes the hash.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        let digest = Sha256::digest(json.as_bytes());
        let mut hex = String::with_capacity(64);
        for byte in digest {
            use std::fmt::Write;
            write!(hex, "{byte:02x}").expect("writing to a string");
        }
        hex
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_configs_hash_equal() {
        let mut a = RunConfig::new("brute");
        a.n = Some(12);
        let mut b = RunConfig::new("brute");
        b.n = Some(12);
        assert_eq!(a.hash(), b.hash());
        assert_eq!(a.hash().len(), 64);
    }

    #[test]
    fn every_knob_feeds_the_hash() {
        let base = RunConfig::new("brute");
        let mut tweaked = Vec::new();
        let mut c = base.clone();
        c.n = Some(9);
        tweaked.push(c.hash());
        let mut c = base.clone();
        c.jobs = 8;
        tweaked.push(c.hash());
        let mut c = base.clone();
        c.seed = 1;
        tweaked.push(c.hash());
        let mut c = base.clone();
        c.tol = 1e-9;
        tweaked.push(c.hash());
        let mut c = base.clone();
        c.force = true;
        tweaked.push(c.hash());
        tweaked.push(RunConfig::new("dsearch").hash());
        tweaked.push(base.hash());
        tweaked.sort();
        tweaked.dedup();
        assert_eq!(tweaked.len(), 7, "some knob did not change the hash");
    }

    #[test]
    fn the_output_path_is_not_part_of_the_identity() {
        let mut a = RunConfig::new("brute");
        a.out = Some(PathBuf::from("/tmp/one.jsonl"));
        let b = RunConfig::new("brute");
        assert_eq!(a.hash(), b.hash());
    }
}
