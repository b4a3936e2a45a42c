//! Text serializations shared by the library and the command-line tool.
//! All numbers are written as exact integers.

use std::fmt::Write;

use serde_json::json;

use crate::bseq::BSeqRecord;
use crate::slope::Slope;

/// `k,B,case,parity_predicted` rows; `parity` holds one prediction per record.
pub fn bseq_csv(records: &[BSeqRecord], parity: &[u8]) -> String {
    assert_eq!(records.len(), parity.len());
    let mut out = String::from("k,B,case,parity_predicted\n");
    for (r, p) in records.iter().zip(parity) {
        writeln!(out, "{},{},{},{}", r.k, r.value, r.case, p).unwrap();
    }
    out
}

/// `n,m` rows.
pub fn sweep_csv(values: &[(usize, usize)]) -> String {
    let mut out = String::from("n,m\n");
    for (n, m) in values {
        writeln!(out, "{n},{m}").unwrap();
    }
    out
}

/// `{"slope": .., "lambda": .., "values": [[n, m], ..]}`.
pub fn sweep_json(slope: &Slope, lambda: i64, values: &[(usize, usize)]) -> serde_json::Value {
    json!({
        "slope": slope.to_string(),
        "lambda": lambda,
        "values": values.iter().map(|&(n, m)| [n, m]).collect::<Vec<_>>(),
    })
}
