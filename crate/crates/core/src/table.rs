use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Count;

/// What a table cell represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// A genuine path count (weakly above `y = x - l`).
    PathCount,
    /// Polynomial continuation below the boundary; may be negative.
    Extension,
    /// Zero because the point lies below the boundary.
    ForcedZero,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::PathCount => "path_count",
            Region::Extension => "extension",
            Region::ForcedZero => "forced_zero",
        }
    }

    pub fn parse(s: &str) -> Option<Region> {
        match s {
            "path_count" => Some(Region::PathCount),
            "extension" => Some(Region::Extension),
            "forced_zero" => Some(Region::ForcedZero),
            _ => None,
        }
    }
}

/// Rectangular grid of counts indexed by `(n, m)` for `0 <= n <= n_max`,
/// `0 <= m <= m_max`, where `n` counts right steps and `m` up steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    l: usize,
    n_max: usize,
    m_max: usize,
    cells: Vec<Count>,
    regions: Vec<Region>,
}

impl CountTable {
    /// A table of zeros, every cell tagged by its position relative to the
    /// boundary `y = x - l`.
    pub fn new(n_max: usize, m_max: usize, l: usize) -> CountTable {
        let size = (n_max + 1) * (m_max + 1);
        let mut table = CountTable {
            l,
            n_max,
            m_max,
            cells: vec![Count::default(); size],
            regions: vec![Region::ForcedZero; size],
        };
        for m in 0..=m_max {
            for n in 0..=n_max {
                if table.in_boundary(n, m) {
                    let i = table.index(n, m);
                    table.regions[i] = Region::PathCount;
                }
            }
        }
        table
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    /// Whether `(n, m)` lies weakly above `y = x - l`.
    pub fn in_boundary(&self, n: usize, m: usize) -> bool {
        m + self.l >= n
    }

    pub fn contains(&self, n: i64, m: i64) -> bool {
        n >= 0 && m >= 0 && n as usize <= self.n_max && m as usize <= self.m_max
    }

    fn index(&self, n: usize, m: usize) -> usize {
        debug_assert!(n <= self.n_max && m <= self.m_max);
        m * (self.n_max + 1) + n
    }

    /// # Panics
    /// If `(n, m)` is outside the table.
    pub fn get(&self, n: usize, m: usize) -> &Count {
        assert!(
            n <= self.n_max && m <= self.m_max,
            "({n}, {m}) outside table"
        );
        &self.cells[self.index(n, m)]
    }

    pub fn try_get(&self, n: i64, m: i64) -> Result<&Count> {
        if self.contains(n, m) {
            Ok(self.get(n as usize, m as usize))
        } else {
            Err(Error::OutOfTable { n, m })
        }
    }

    pub fn region(&self, n: usize, m: usize) -> Region {
        self.regions[self.index(n, m)]
    }

    pub fn set(&mut self, n: usize, m: usize, value: Count, region: Region) {
        let i = self.index(n, m);
        self.cells[i] = value;
        self.regions[i] = region;
    }

    /// Cells in fill order: `m` ascending, `n` ascending within a row.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Count, Region)> + '_ {
        (0..=self.m_max).flat_map(move |m| {
            (0..=self.n_max).map(move |n| (n, m, self.get(n, m), self.region(n, m)))
        })
    }

    /// Whether a cell is drawn in the grid layout. Forced zeros strictly below
    /// the line `m = n - l - 1` are left blank, as are the points below it.
    pub fn is_displayed(&self, n: usize, m: usize) -> bool {
        match self.region(n, m) {
            Region::ForcedZero => m + self.l + 1 >= n,
            _ => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regions_follow_boundary() {
        let t = CountTable::new(9, 4, 5);
        assert_eq!(t.region(5, 0), Region::PathCount);
        assert_eq!(t.region(6, 0), Region::ForcedZero);
        assert!(t.is_displayed(6, 0));
        assert!(!t.is_displayed(7, 0));
        assert!(t.try_get(10, 0).is_err());
        assert!(t.try_get(-1, 0).is_err());
    }

    #[test]
    fn iter_is_row_major() {
        let t = CountTable::new(2, 1, 0);
        let order: Vec<_> = t.iter().map(|(n, m, _, _)| (n, m)).collect();
        assert_eq!(order, [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]);
    }
}
