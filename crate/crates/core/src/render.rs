//! Table output as a text grid, CSV and JSON, with parsers for the two
//! machine formats.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{CountTable, Region};
use crate::Count;

/// Identifies what a rendered table contains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMeta {
    pub pattern: String,
    pub class: String,
    pub l: usize,
}

/// Rows `m` descending, columns `n` ascending, numbers right-aligned.
/// Forced zeros away from the boundary are left blank.
pub fn render_grid(table: &CountTable) -> String {
    let (n_max, m_max) = (table.n_max(), table.m_max());
    let text = |n: usize, m: usize| {
        if table.is_displayed(n, m) {
            table.get(n, m).to_string()
        } else {
            String::new()
        }
    };
    let widths: Vec<usize> = (0..=n_max)
        .map(|n| {
            (0..=m_max)
                .map(|m| text(n, m).len())
                .chain([n.to_string().len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let label = m_max.to_string().len().max(1);
    let mut out = String::new();
    for m in (0..=m_max).rev() {
        let _ = write!(out, "{m:>label$} |");
        for (n, w) in widths.iter().enumerate() {
            let _ = write!(out, " {:>w$}", text(n, m));
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    let total: usize = widths.iter().map(|w| w + 1).sum();
    let _ = writeln!(out, "{}-+{}", "-".repeat(label), "-".repeat(total));
    let _ = write!(out, "{:>label$} |", "");
    for (n, w) in widths.iter().enumerate() {
        let _ = write!(out, " {n:>w$}");
    }
    out.push('\n');
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRecord {
    n: usize,
    m: usize,
    value: String,
    region: Region,
}

/// `# key=value` metadata lines, then `n,m,value,region` records.
pub fn render_csv(meta: &TableMeta, table: &CountTable) -> Result<String> {
    let mut out = format!(
        "# pattern={}\n# class={}\n# l={}\n",
        meta.pattern, meta.class, meta.l
    );
    let mut writer = csv::Writer::from_writer(Vec::new());
    for (n, m, value, region) in table.iter() {
        writer
            .serialize(CsvRecord {
                n,
                m,
                value: value.to_string(),
                region,
            })
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Parse(e.to_string()))?;
    out.push_str(&String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))?);
    Ok(out)
}

fn assemble(l: usize, cells: Vec<(usize, usize, Count, Region)>) -> Result<CountTable> {
    let n_max = cells.iter().map(|c| c.0).max().unwrap_or(0);
    let m_max = cells.iter().map(|c| c.1).max().unwrap_or(0);
    if cells.len() != (n_max + 1) * (m_max + 1) {
        return Err(Error::Parse(format!(
            "expected {} cells for a {}x{} table, found {}",
            (n_max + 1) * (m_max + 1),
            n_max + 1,
            m_max + 1,
            cells.len()
        )));
    }
    let mut table = CountTable::new(n_max, m_max, l);
    for (n, m, value, region) in cells {
        table.set(n, m, value, region);
    }
    Ok(table)
}

fn parse_count(s: &str) -> Result<Count> {
    Count::from_str(s).map_err(|e| Error::Parse(format!("bad count {s:?}: {e}")))
}

/// Inverse of [`render_csv`].
pub fn parse_csv(text: &str) -> Result<(TableMeta, CountTable)> {
    let (mut pattern, mut class, mut l) = (None, None, None);
    for line in text.lines().filter_map(|line| line.strip_prefix('#')) {
        match line.trim().split_once('=') {
            Some(("pattern", v)) => pattern = Some(v.to_string()),
            Some(("class", v)) => class = Some(v.to_string()),
            Some(("l", v)) => {
                l = Some(
                    v.parse()
                        .map_err(|_| Error::Parse(format!("bad l {v:?}")))?,
                )
            }
            _ => {}
        }
    }
    let missing = |key: &str| Error::Parse(format!("missing # {key}= line"));
    let meta = TableMeta {
        pattern: pattern.ok_or_else(|| missing("pattern"))?,
        class: class.ok_or_else(|| missing("class"))?,
        l: l.ok_or_else(|| missing("l"))?,
    };
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut cells = Vec::new();
    for record in reader.deserialize::<CsvRecord>() {
        let r = record.map_err(|e| Error::Parse(e.to_string()))?;
        cells.push((r.n, r.m, parse_count(&r.value)?, r.region));
    }
    let table = assemble(meta.l, cells)?;
    Ok((meta, table))
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonMeta {
    pattern: String,
    class: String,
    l: usize,
    n_max: usize,
    m_max: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTable {
    meta: JsonMeta,
    cells: Vec<CsvRecord>,
}

/// `{"meta": {...}, "cells": [{"n", "m", "value", "region"}]}`; values are
/// decimal strings so that large counts survive any JSON reader.
pub fn render_json(meta: &TableMeta, table: &CountTable) -> Result<String> {
    let doc = JsonTable {
        meta: JsonMeta {
            pattern: meta.pattern.clone(),
            class: meta.class.clone(),
            l: meta.l,
            n_max: table.n_max(),
            m_max: table.m_max(),
        },
        cells: table
            .iter()
            .map(|(n, m, value, region)| CsvRecord {
                n,
                m,
                value: value.to_string(),
                region,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))
}

/// Inverse of [`render_json`].
pub fn parse_json(text: &str) -> Result<(TableMeta, CountTable)> {
    let doc: JsonTable = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let cells = doc
        .cells
        .into_iter()
        .map(|r| Ok((r.n, r.m, parse_count(&r.value)?, r.region)))
        .collect::<Result<Vec<_>>>()?;
    let table = assemble(doc.meta.l, cells)?;
    if (table.n_max(), table.m_max()) != (doc.meta.n_max, doc.meta.m_max) {
        return Err(Error::Parse("cells do not match n_max/m_max".into()));
    }
    let meta = TableMeta {
        pattern: doc.meta.pattern,
        class: doc.meta.class,
        l: doc.meta.l,
    };
    Ok((meta, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dispatch::build_table;
    use crate::parse_pattern;

    fn sample() -> (TableMeta, CountTable) {
        let p = parse_pattern("rrrr").unwrap();
        let (table, _) = build_table(&p, 9, 4, 5, true).unwrap();
        let meta = TableMeta {
            pattern: "rrrr".into(),
            class: p.classify().class.to_string(),
            l: 5,
        };
        (meta, table)
    }

    #[test]
    fn grid_layout() {
        let (_, table) = sample();
        let grid = render_grid(&table);
        let lines: Vec<&str> = grid.lines().collect();
        assert_eq!(lines.len(), 7);
        assert!(lines[0].starts_with("4 |"));
        assert!(lines[0].ends_with("112"));
        assert!(lines[4].ends_with("-3 -11"));
        assert!(lines[6].trim_end().ends_with('9'));
    }

    #[test]
    fn grid_blanks_far_forced_zeros() {
        let p = parse_pattern("urr").unwrap();
        let (table, _) = build_table(&p, 3, 1, 0, false).unwrap();
        let grid = render_grid(&table);
        let rows: Vec<&str> = grid.lines().collect();
        // row m = 0: (0,0)=1, (1,0)=0 shown, (2,0) and (3,0) blank
        assert_eq!(
            rows[1].split_whitespace().collect::<Vec<_>>(),
            ["0", "|", "1", "0"]
        );
    }

    #[test]
    fn csv_round_trip() {
        let (meta, table) = sample();
        let text = render_csv(&meta, &table).unwrap();
        assert!(text.contains("n,m,value,region\n"));
        assert!(text.contains("9,1,-14,extension\n"));
        assert_eq!(parse_csv(&text).unwrap(), (meta, table));
    }

    #[test]
    fn json_round_trip() {
        let (meta, table) = sample();
        let text = render_json(&meta, &table).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["meta"]["n_max"], 9);
        assert_eq!(value["cells"][0]["value"], "1");
        assert_eq!(parse_json(&text).unwrap(), (meta, table));
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_csv("n,m,value,region\n0,0,1,path_count\n").is_err());
        assert!(
            parse_csv("# pattern=u\n# class=x\n# l=0\nn,m,value,region\n0,0,z,path_count\n")
                .is_err()
        );
        assert!(parse_json("{}").is_err());
    }
}
