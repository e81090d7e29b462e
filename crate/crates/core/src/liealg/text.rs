//! Plain-text catalog format.
//!
//! One record per line; blank lines and lines starting with `#` are ignored.
//!
//! ```text
//! record := name ';' dim (';' item)*
//! item   := '[' i ',' j ',' k ']' '=' rational     1-based, i < j, value ≠ 0
//!         | 'stub'                                  relations not written out
//!         | 'params(' [key '=' rational (',' key '=' rational)*] ')'
//! rational := ['-'] digits ['/' digits]
//! ```
//!
//! Canonical output sorts entries by `(i, j, k)`, writes params last with
//! keys sorted, and separates items with `"; "`. Parsing canonical output and
//! printing it again reproduces the text exactly.

use std::collections::BTreeMap;

use thiserror::Error;

use super::LieAlgebra;
use crate::rational::{format_rational, parse_rational, Rational};
use num::Zero;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct CatalogParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraRecord {
    pub name: String,
    pub dim: usize,
    /// `(i, j, k, value)` with `i < j`, 1-based, sorted.
    pub entries: Vec<(usize, usize, usize, Rational)>,
    pub params: BTreeMap<String, Rational>,
    pub stub: bool,
}

impl AlgebraRecord {
    pub fn from_algebra(a: &LieAlgebra) -> Self {
        AlgebraRecord {
            name: a.name.clone(),
            dim: a.dim(),
            entries: a.relations(),
            params: a.params.clone(),
            stub: false,
        }
    }

    pub fn stub(name: &str, dim: usize) -> Self {
        AlgebraRecord {
            name: name.to_string(),
            dim,
            entries: Vec::new(),
            params: BTreeMap::new(),
            stub: true,
        }
    }

    /// `None` for stubs.
    pub fn to_algebra(&self) -> Option<LieAlgebra> {
        if self.stub {
            return None;
        }
        let mut a = LieAlgebra::from_relations(self.name.clone(), self.dim, &self.entries).ok()?;
        a.params = self.params.clone();
        Some(a)
    }

    pub fn to_line(&self) -> String {
        let mut items = vec![self.name.clone(), self.dim.to_string()];
        if self.stub {
            items.push("stub".into());
        }
        for (i, j, k, v) in &self.entries {
            items.push(format!("[{i},{j},{k}]={}", format_rational(v)));
        }
        if !self.params.is_empty() {
            let ps: Vec<String> =
                self.params.iter().map(|(k, v)| format!("{k}={}", format_rational(v))).collect();
            items.push(format!("params({})", ps.join(",")));
        }
        items.join("; ")
    }
}

fn err(line: usize, message: impl Into<String>) -> CatalogParseError {
    CatalogParseError { line, message: message.into() }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || "_.+-".contains(c))
}

pub fn parse_record(src: &str, line: usize) -> Result<AlgebraRecord, CatalogParseError> {
    let mut parts = src.split(';').map(str::trim);
    let name = parts.next().unwrap_or("");
    if !valid_name(name) {
        return Err(err(line, format!("invalid name {name:?}")));
    }
    let dim_s = parts.next().ok_or_else(|| err(line, "missing dimension"))?;
    let dim: usize = dim_s.parse().map_err(|_| err(line, format!("invalid dimension {dim_s:?}")))?;
    if dim > super::MAX_DIM {
        return Err(err(line, format!("dimension {dim} too large")));
    }
    let mut rec = AlgebraRecord {
        name: name.to_string(),
        dim,
        entries: Vec::new(),
        params: BTreeMap::new(),
        stub: false,
    };
    let mut seen_params = false;
    for item in parts {
        if item == "stub" {
            rec.stub = true;
        } else if let Some(body) = item.strip_prefix("params(").and_then(|s| s.strip_suffix(')')) {
            if seen_params {
                return Err(err(line, "duplicate params"));
            }
            seen_params = true;
            for kv in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (k, v) = kv.split_once('=').ok_or_else(|| err(line, format!("bad param {kv:?}")))?;
                let (k, v) = (k.trim(), v.trim());
                if !valid_name(k) {
                    return Err(err(line, format!("bad param key {k:?}")));
                }
                let r = parse_rational(v).ok_or_else(|| err(line, format!("bad rational {v:?}")))?;
                if rec.params.insert(k.to_string(), r).is_some() {
                    return Err(err(line, format!("duplicate param {k}")));
                }
            }
        } else if let Some(rest) = item.strip_prefix('[') {
            let (idx, val) = rest.split_once("]=").ok_or_else(|| err(line, format!("bad entry {item:?}")))?;
            let ix: Vec<usize> = idx
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| err(line, format!("bad indices in {item:?}")))?;
            let [i, j, k] = ix[..] else {
                return Err(err(line, format!("expected three indices in {item:?}")));
            };
            if i == 0 || j == 0 || k == 0 || i > dim || j > dim || k > dim {
                return Err(err(line, format!("index out of range in {item:?}")));
            }
            if i >= j {
                return Err(err(line, format!("entries must have i < j: {item:?}")));
            }
            let v = parse_rational(val).ok_or_else(|| err(line, format!("bad rational in {item:?}")))?;
            if v.is_zero() {
                return Err(err(line, format!("zero entries are implicit: {item:?}")));
            }
            if rec.entries.iter().any(|e| (e.0, e.1, e.2) == (i, j, k)) {
                return Err(err(line, format!("duplicate entry {item:?}")));
            }
            rec.entries.push((i, j, k, v));
        } else {
            return Err(err(line, format!("unrecognized item {item:?}")));
        }
    }
    if rec.stub && !rec.entries.is_empty() {
        return Err(err(line, "stub records carry no entries"));
    }
    rec.entries.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    Ok(rec)
}

pub fn parse_catalog(src: &str) -> Result<Vec<AlgebraRecord>, CatalogParseError> {
    src.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(n, l)| parse_record(l, n + 1))
        .collect()
}

pub fn print_catalog(records: &[AlgebraRecord]) -> String {
    records.iter().map(|r| r.to_line() + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    #[test]
    fn canonical_lines() {
        let r = AlgebraRecord::from_algebra(&catalog::mult7(crate::rational::int(1), crate::rational::rat(-3, 2)));
        assert_eq!(r.to_line(), "mult7; 5; [1,3,1]=1; [2,3,2]=-3/2; params(a=1,b=-3/2)");
        assert_eq!(AlgebraRecord::stub("g5_17", 5).to_line(), "g5_17; 5; stub");
    }

    #[test]
    fn whole_catalog_roundtrips() {
        let text = print_catalog(&catalog::records());
        let parsed = parse_catalog(&text).unwrap();
        assert_eq!(parsed, catalog::records());
        assert_eq!(print_catalog(&parsed), text);
        for (r, a) in parsed.iter().zip(catalog::defined()) {
            assert!(r.to_algebra().unwrap().same_constants(&a));
        }
    }

    #[test]
    fn rejects_malformed_records() {
        for bad in [
            "x; 3; [2,1,3]=1",
            "x; 3; [1,2,4]=1",
            "x; 3; [1,2,3]=0",
            "x; 3; [1,2,3]=1/0",
            "x; 7",
            "x; 3; [1,2,3]=1; [1,2,3]=2",
            "x; 3; stub; [1,2,3]=1",
            "; 3",
            "x; 3; foo",
        ] {
            assert!(parse_record(bad, 1).is_err(), "{bad}");
        }
    }

    #[test]
    fn tolerant_whitespace_and_comments() {
        let recs = parse_catalog("# comment\n\n l2 ;2;  [1,2,1]= 1 \n").unwrap();
        assert_eq!(recs[0].to_line(), "l2; 2; [1,2,1]=1");
    }
}
