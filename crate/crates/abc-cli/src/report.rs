//! CSV report assembly from the results store.

use std::collections::BTreeMap;

use anyhow::Result;

use crate::runner::SearchPayload;
use crate::store::StoreRecord;

pub const REPORT_HEADER: &str = "n,abc_min_brute,abc_min_dsearch,methods,properties,config_hash";

struct Row<'a> {
    brute: Option<(SearchPayload, &'a str)>,
    dsearch: Option<(SearchPayload, &'a str)>,
}

/// Build the comparison table: one row per order, with both methods side
/// by side. When the same (order, method) pair was recorded repeatedly,
/// the latest record wins. Orders in an explicit `range` with no records
/// at all appear as gap rows; without a range, the table covers exactly
/// the orders present in the store.
pub fn build_report(records: &[StoreRecord], range: Option<(usize, usize)>) -> Result<String> {
    let mut rows: BTreeMap<usize, Row> = BTreeMap::new();
    for record in records {
        if record.kind != "brute" && record.kind != "dsearch" {
            continue;
        }
        let payload: SearchPayload = serde_json::from_value(record.payload.clone())?;
        let row = rows.entry(payload.n).or_insert(Row {
            brute: None,
            dsearch: None,
        });
        let slot = if record.kind == "brute" {
            &mut row.brute
        } else {
            &mut row.dsearch
        };
        *slot = Some((payload, record.config_hash.as_str()));
    }

    let orders: Vec<usize> = match range {
        Some((lo, hi)) => (lo..=hi).collect(),
        None => rows.keys().copied().collect(),
    };

    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for n in orders {
        let row = rows.get(&n);
        let (brute, dsearch) = match row {
            Some(row) => (row.brute.as_ref(), row.dsearch.as_ref()),
            None => (None, None),
        };
        let abc = |slot: Option<&(SearchPayload, &str)>| {
            slot.map_or(String::new(), |(p, _)| format!("{:.10}", p.abc_min))
        };
        let methods = match (brute, dsearch) {
            (Some(_), Some(_)) => "brute+dsearch",
            (Some(_), None) => "brute",
            (None, Some(_)) => "dsearch",
            (None, None) => "missing",
        };
        let properties = brute
            .or(dsearch)
            .map_or("", |(p, _)| p.properties.as_str());
        let mut hashes: Vec<&str> = Vec::new();
        for slot in [brute, dsearch].into_iter().flatten() {
            if !hashes.contains(&slot.1) {
                hashes.push(slot.1);
            }
        }
        out.push_str(&format!(
            "{n},{},{},{methods},{properties},{}\n",
            abc(brute),
            abc(dsearch),
            hashes.join("+")
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn record(kind: &str, n: usize, abc_min: f64, hash: &str) -> StoreRecord {
        StoreRecord {
            tool_version: "0.0.0-test".to_string(),
            config_hash: hash.to_string(),
            kind: kind.to_string(),
            payload: json!({
                "n": n,
                "abc_min": abc_min,
                "trees": [],
                "examined": 1,
                "properties": "pass",
            }),
        }
    }

    #[test]
    fn empty_store_gives_a_header_only_table() {
        let table = build_report(&[], None).unwrap();
        assert_eq!(table, format!("{REPORT_HEADER}\n"));
    }

    #[test]
    fn ranged_report_lists_gaps_but_still_succeeds() {
        let records = [record("brute", 11, 7.0306276973, "aa")];
        let table = build_report(&records, Some((10, 12))).unwrap();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "10,,,missing,,");
        assert!(lines[2].starts_with("11,7.0306276973,,brute,pass,aa"));
        assert_eq!(lines[3], "12,,,missing,,");
    }

    #[test]
    fn methods_share_a_row_and_distinct_hashes_are_both_shown() {
        let records = [
            record("brute", 10, 6.3235209162, "aa"),
            record("dsearch", 10, 6.3235209162, "bb"),
        ];
        let table = build_report(&records, None).unwrap();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[1],
            "10,6.3235209162,6.3235209162,brute+dsearch,pass,aa+bb"
        );
    }

    #[test]
    fn reruns_of_the_same_method_keep_only_the_latest() {
        let records = [
            record("brute", 10, 9.9, "old"),
            record("brute", 10, 6.3235209162, "new"),
        ];
        let table = build_report(&records, None).unwrap();
        assert!(table.contains("new"));
        assert!(!table.contains("old"));
    }
}
