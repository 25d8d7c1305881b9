//! Append-only JSON-lines store for run results.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

/// Environment variable that overrides the default store location.
pub const STORE_ENV: &str = "ABC_RESULTS";

pub const DEFAULT_STORE: &str = "abc-results.jsonl";

/// One stored line: a result payload stamped with the producing tool
/// version and configuration hash.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StoreRecord {
    pub tool_version: String,
    pub config_hash: String,
    /// Payload discriminator: `brute`, `dsearch`, `constant`, `scan`,
    /// `sweep`, or `greedy`.
    pub kind: String,
    pub payload: serde_json::Value,
}

#[derive(Debug, Clone)]
pub struct ResultStore {
    path: PathBuf,
}

impl ResultStore {
    pub fn at(path: impl Into<PathBuf>) -> ResultStore {
        ResultStore { path: path.into() }
    }

    /// Resolve the store path: explicit flag, then the environment
    /// override, then the default file in the working directory.
    pub fn resolve(flag: Option<PathBuf>) -> ResultStore {
        let path = flag
            .or_else(|| std::env::var_os(STORE_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_STORE));
        ResultStore { path }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, record: &StoreRecord) -> Result<()> {
        let line = serde_json::to_string(record).context("serializing record")?;
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening {} for append", self.path.display()))?;
        writeln!(file, "{line}").context("appending record")?;
        Ok(())
    }

    /// All records in file order. A store that does not exist yet reads
    /// as empty; a corrupt line is an error naming its line number.
    pub fn load(&self) -> Result<Vec<StoreRecord>> {
        let file = match File::open(&self.path) {
            Ok(file) => file,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => {
                return Err(e).with_context(|| format!("opening {}", self.path.display()))
            }
        };
        let mut records = Vec::new();
        for (idx, line) in BufReader::new(file).lines().enumerate() {
            let line = line.context("reading store")?;
            if line.trim().is_empty() {
                continue;
            }
            let record = serde_json::from_str(&line).with_context(|| {
                format!("parse error at line {} of {}", idx + 1, self.path.display())
            })?;
            records.push(record);
        }
        Ok(records)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(kind: &str, n: u64) -> StoreRecord {
        StoreRecord {
            tool_version: "0.0.0-test".to_string(),
            config_hash: "deadbeef".to_string(),
            kind: kind.to_string(),
            payload: serde_json::json!({ "n": n }),
        }
    }

    #[test]
    fn appends_accumulate_in_order() {
        let dir = tempfile::tempdir().unwrap();
        let store = ResultStore::at(dir.path().join("results.jsonl"));
        store.append(&sample("brute", 5)).unwrap();
        store.append(&sample("dsearch", 5)).unwrap();
        let records = store.load().unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].kind, "brute");
        assert_eq!(records[1].kind, "dsearch");
    }

    #[test]
    fn a_missing_store_reads_as_empty() {
        let dir = tempfile::tempdir().unwrap();
        let store = ResultStore::at(dir.path().join("nothing.jsonl"));
        assert!(store.load().unwrap().is_empty());
    }

    #[test]
    fn identical_records_write_identical_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        let store = ResultStore::at(&path);
        store.append(&sample("brute", 16)).unwrap();
        store.append(&sample("brute", 16)).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], lines[1]);
    }

    #[test]
    fn corrupt_lines_name_their_position() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        std::fs::write(&path, "{not json}\n").unwrap();
        let err = ResultStore::at(&path).load().unwrap_err();
        assert!(format!("{err:#}").contains("line 1"));
    }
}
