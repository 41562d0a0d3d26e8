//! Text formats: histogram JSON, table CSV, count payloads.
//!
//! JSON objects are built as `serde_json::Value`, whose maps keep keys
//! sorted, and every count is a decimal string.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use invpat_core::counting::CountTable;
use invpat_core::enumerate::Histogram;
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::{Error, Result};

/// `{"bins":{"v":"count"},"n":n,"statistic":name}`.
pub fn histogram_json(h: &Histogram) -> Value {
    let bins: Map<String, Value> =
        h.bins.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_string()))).collect();
    json!({ "n": h.n, "statistic": h.statistic, "bins": bins })
}

/// Inverse of [`histogram_json`].
pub fn histogram_from_json(v: &Value) -> Result<Histogram> {
    let bad = |what: &str| Error::Parse(format!("histogram JSON: {what}"));
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))?;
    let statistic = v.get("statistic").and_then(Value::as_str).ok_or_else(|| bad("missing statistic"))?;
    let mut h = Histogram::new(n as usize, statistic);
    let bins = v.get("bins").and_then(Value::as_object).ok_or_else(|| bad("missing bins"))?;
    for (k, count) in bins {
        let k: i64 = k.parse().map_err(|_| bad("bin key"))?;
        let count = count.as_str().ok_or_else(|| bad("count must be a string"))?;
        h.bins.insert(k, parse_big(count)?);
    }
    Ok(h)
}

/// Histogram as `value,count` CSV.
pub fn histogram_csv(h: &Histogram) -> String {
    let mut out = String::from("value,count\n");
    for (k, v) in &h.bins {
        let _ = writeln!(out, "{k},{v}");
    }
    out
}

/// Every cell of the table, header from the index names plus `value`.
pub fn table_csv(t: &CountTable) -> String {
    let mut out = String::new();
    for d in &t.dims {
        out.push_str(d.name);
        out.push(',');
    }
    out.push_str("value\n");
    for (idx, v) in t.entries() {
        for i in idx {
            let _ = write!(out, "{i},");
        }
        let _ = writeln!(out, "{v}");
    }
    out
}

/// The table as `{"name":..,"dims":[..],"cells":[{"index":[..],"value":".."}]}`.
pub fn table_json(t: &CountTable) -> Value {
    let dims: Vec<Value> =
        t.dims.iter().map(|d| json!({ "name": d.name, "min": d.min, "max": d.max })).collect();
    let cells: Vec<Value> =
        t.entries().map(|(idx, v)| json!({ "index": idx, "value": v.to_string() })).collect();
    json!({ "name": t.name, "dims": dims, "cells": cells })
}

/// Table cells keyed by index tuple.
pub type Cells = BTreeMap<Vec<i64>, BigUint>;

/// Parses table CSV into header and cells, checking the header.
pub fn parse_table_csv(text: &str) -> Result<(Vec<String>, Cells)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<String> = lines
        .next()
        .ok_or_else(|| Error::Parse("empty CSV".into()))?
        .split(',')
        .map(|s| s.trim().to_string())
        .collect();
    if header.last().map(String::as_str) != Some("value") {
        return Err(Error::Parse("last CSV column must be `value`".into()));
    }
    let mut cells = BTreeMap::new();
    for line in lines {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != header.len() {
            return Err(Error::Parse(format!("row has {} fields: {line}", fields.len())));
        }
        let (value, index) = fields.split_last().expect("nonempty");
        let index = index
            .iter()
            .map(|s| s.parse::<i64>().map_err(|_| Error::Parse(format!("bad index {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        cells.insert(index, parse_big(value)?);
    }
    Ok((header, cells))
}

/// Decimal string to `BigUint`.
pub fn parse_big(s: &str) -> Result<BigUint> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

/// Compact JSON text (keys already sorted by `serde_json`'s map).
pub fn to_json_string(v: &Value) -> String {
    serde_json::to_string(v).expect("Value serialization is infallible")
}
