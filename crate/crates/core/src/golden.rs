//! Reference tables shipped with the crate.
//!
//! Each file lists a pattern, the boundary offset, whether the table shows
//! the extension below the boundary, and rows `m: v v ...` for
//! `n = 0, 1, ...`. A `.` marks a cell that is not part of the reference.

use std::str::FromStr;

use crate::dispatch;
use crate::error::{Error, Result};
use crate::pattern::{parse_pattern, Pattern};
use crate::table::CountTable;
use crate::Count;

const SOURCES: [(&str, &str); 4] = [
    ("rrrr-l5", include_str!("../data/ra4_l5.txt")),
    ("uuuu", include_str!("../data/uc4.txt")),
    ("urruurr", include_str!("../data/urruurr.txt")),
    ("rrruuurrruu", include_str!("../data/rrruuurrruu.txt")),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCell {
    pub n: usize,
    pub m: usize,
    pub value: Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub name: String,
    pub pattern: Pattern,
    pub l: usize,
    pub extend: bool,
    pub n_max: usize,
    pub m_max: usize,
    pub cells: Vec<GoldenCell>,
}

/// A cell where a computed table disagrees with the reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDiff {
    pub n: usize,
    pub m: usize,
    pub expected: Count,
    pub actual: Option<Count>,
}

fn parse_error(name: &str, line: usize, what: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{name}:{line}: {what}"))
}

/// Parses one reference table.
pub fn parse_golden(name: &str, text: &str) -> Result<GoldenTable> {
    let mut pattern = None;
    let mut l = 0;
    let mut extend = false;
    let mut cells = Vec::new();
    let (mut n_max, mut m_max) = (0, 0);
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("pattern ") {
            pattern = Some(parse_pattern(rest)?);
        } else if let Some(rest) = line.strip_prefix("l ") {
            l = rest
                .trim()
                .parse()
                .map_err(|e| parse_error(name, lineno, e))?;
        } else if line == "extend" {
            extend = true;
        } else if let Some((m, values)) = line.split_once(':') {
            let m: usize = m.trim().parse().map_err(|e| parse_error(name, lineno, e))?;
            m_max = m_max.max(m);
            for (n, v) in values.split_whitespace().enumerate() {
                n_max = n_max.max(n);
                if v == "." {
                    continue;
                }
                let value = Count::from_str(v).map_err(|e| parse_error(name, lineno, e))?;
                cells.push(GoldenCell { n, m, value });
            }
        } else {
            return Err(parse_error(
                name,
                lineno,
                format!("unrecognised line {line:?}"),
            ));
        }
    }
    let pattern = pattern.ok_or_else(|| parse_error(name, 0, "missing pattern line"))?;
    Ok(GoldenTable {
        name: name.to_string(),
        pattern,
        l,
        extend,
        n_max,
        m_max,
        cells,
    })
}

/// All shipped reference tables.
pub fn golden_tables() -> Vec<GoldenTable> {
    SOURCES
        .iter()
        .map(|(name, text)| parse_golden(name, text).expect("shipped reference tables parse"))
        .collect()
}

impl GoldenTable {
    /// Cells of `table` that differ from (or are missing against) the
    /// reference. Cells marked `.` are not compared.
    pub fn diff(&self, table: &CountTable) -> Vec<CellDiff> {
        self.cells
            .iter()
            .filter_map(|cell| {
                let actual = table.try_get(cell.n as i64, cell.m as i64).ok().cloned();
                (actual.as_ref() != Some(&cell.value)).then(|| CellDiff {
                    n: cell.n,
                    m: cell.m,
                    expected: cell.value.clone(),
                    actual,
                })
            })
            .collect()
    }

    /// Builds the table the way the library would for this pattern.
    pub fn build(&self) -> Result<CountTable> {
        dispatch::build_table(&self.pattern, self.n_max, self.m_max, self.l, self.extend)
            .map(|(t, _)| t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_shipped_tables() {
        let tables = golden_tables();
        assert_eq!(tables.len(), 4);
        let ra = &tables[0];
        assert_eq!((ra.l, ra.extend, ra.n_max, ra.m_max), (5, true, 9, 4));
        let uc = &tables[1];
        assert_eq!((uc.n_max, uc.m_max), (4, 9));
        // blanks are skipped
        assert!(!uc.cells.iter().any(|c| (c.n, c.m) == (0, 9)));
        assert!(uc
            .cells
            .iter()
            .any(|c| (c.n, c.m, c.value.clone()) == (0, 5, 0.into())));
    }

    #[test]
    fn shipped_tables_reproduce() {
        for golden in golden_tables() {
            let table = golden.build().unwrap();
            assert_eq!(golden.diff(&table), [], "{}", golden.name);
        }
    }

    #[test]
    fn diff_reports_changes() {
        let golden = &golden_tables()[2];
        let mut table = golden.build().unwrap();
        table.set(8, 8, 1.into(), crate::Region::PathCount);
        let diff = golden.diff(&table);
        assert_eq!(diff.len(), 1);
        assert_eq!(diff[0].expected, 1236.into());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_golden("x", "l 0\n0: 1\n").is_err());
        assert!(parse_golden("x", "pattern ur\nbogus\n").is_err());
        assert!(parse_golden("x", "pattern ur\n0: 1 z\n").is_err());
    }
}
