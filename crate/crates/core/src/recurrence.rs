//! Class-specific recurrences, evaluated into [`CountTable`]s.
//!
//! Every builder fills cells row by row (`m` ascending, `n` ascending within
//! a row), so each dependency is already present when a cell is computed.
//! Terms with a negative index, or at a point below the boundary, contribute
//! zero. For `l = 0` the initial values are `s_n(n - 1) = [n = 0]`, i.e. the
//! virtual cell `(0, -1)` holds 1.

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pattern::{Pattern, PatternClass, PatternProfile};
use crate::table::{CountTable, Region};
use crate::Count;

/// Reads a counting cell with the conventions above.
fn cell(table: &CountTable, n: i64, m: i64) -> Count {
    if n == 0 && m == -1 && table.l() == 0 {
        return Count::one();
    }
    if n < 0 || m < 0 || m + (table.l() as i64) < n {
        return Count::zero();
    }
    table.get(n as usize, m as usize).clone()
}

fn wrong_class(operation: &'static str, profile: &PatternProfile, expected: &'static str) -> Error {
    Error::WrongClass {
        operation,
        pattern: profile.pattern.to_string(),
        found: profile.class.to_string(),
        expected,
    }
}

/// Paths weakly above `y = x - l` avoiding `r^a`.
///
/// Row `m = 0` holds the initial values (1 for `n <= min(a - 1, l)`, else 0);
/// the rest of the region `m >= n - l` follows
/// `s_n(m) = s_{n-1}(m) + s_n(m-1) - s_{n-a}(m-1)`. With `extend`, cells
/// strictly below the line `m = n - l - 1` are filled downwards by the same
/// recurrence solved for `s_n(m - 1)`, and tagged [`Region::Extension`].
pub fn table_ra(
    a: usize,
    l: usize,
    n_max: usize,
    m_max: usize,
    extend: bool,
) -> Result<CountTable> {
    if a < 2 {
        return Err(Error::InvalidArgument {
            operation: "table_ra",
            reason: format!("a must be at least 2, got {a}"),
        });
    }
    // The downward extension of column n starts from the zero at
    // m = n - l - 1, so the working table must reach that row.
    let rows = if extend {
        m_max.max(n_max.saturating_sub(l + 1))
    } else {
        m_max
    };
    let mut t = CountTable::new(n_max, rows, l);
    for n in 0..=n_max.min(l) {
        let v = if n < a { Count::one() } else { Count::zero() };
        t.set(n, 0, v, Region::PathCount);
    }
    let a = a as i64;
    for m in 1..=rows {
        for n in 0..=n_max {
            if !t.in_boundary(n, m) {
                continue;
            }
            let (ni, mi) = (n as i64, m as i64);
            let v = cell(&t, ni - 1, mi) + cell(&t, ni, mi - 1) - cell(&t, ni - a, mi - 1);
            t.set(n, m, v, Region::PathCount);
        }
    }
    if extend {
        // Column by column, so s_{n-1}(.) and s_{n-a}(.) are final.
        let get = |t: &CountTable, n: i64, m: i64| -> Count {
            if n < 0 || m < 0 {
                Count::zero()
            } else {
                t.get(n as usize, m as usize).clone()
            }
        };
        for n in 0..=n_max {
            // first cell strictly below the forced-zero line
            let Some(top) = (n as i64).checked_sub(l as i64 + 2) else {
                continue;
            };
            for m in (0..=top).rev() {
                let ni = n as i64;
                let v = get(&t, ni, m + 1) - get(&t, ni - 1, m + 1) + get(&t, ni - a, m);
                t.set(n, m as usize, v, Region::Extension);
            }
        }
    }
    if rows == m_max {
        return Ok(t);
    }
    let mut cropped = CountTable::new(n_max, m_max, l);
    for (n, m, v, region) in t.iter().filter(|&(_, m, _, _)| m <= m_max) {
        cropped.set(n, m, v.clone(), region);
    }
    Ok(cropped)
}

/// Ballot paths avoiding a bifix-free depth-0 pattern of dimensions `a x c`:
/// `s_n(m) = s_{n-1}(m) + s_n(m-1) - s_{n-a}(m-c)`.
pub fn table_bifix_free(p: &Pattern, n_max: usize, m_max: usize) -> Result<CountTable> {
    let profile = p.classify();
    if profile.class != PatternClass::BifixFreeDepth0 {
        return Err(wrong_class("table_bifix_free", &profile, "BifixFreeDepth0"));
    }
    let correction =
        |t: &CountTable, n: i64, m: i64| cell(t, n - profile.a as i64, m - profile.c as i64);
    Ok(fill_ballot(n_max, m_max, 0, correction))
}

/// Inclusion-exclusion over the repeated `op'` pieces:
/// `sum_{i >= 0} (-1)^i s_{n-a-bi}(m-c-di)`, stopping once `n - a - bi < 0`.
fn overlap_correction(t: &CountTable, n: i64, m: i64, a: i64, c: i64, b: i64, d: i64) -> Count {
    let mut total = Count::zero();
    let mut i = 0;
    while n - a - b * i >= 0 {
        let term = cell(t, n - a - b * i, m - c - d * i);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        i += 1;
    }
    total
}

fn bifix_params(profile: &PatternProfile) -> (i64, i64, i64, i64) {
    (
        profile.a as i64,
        profile.c as i64,
        profile.b.unwrap_or(0) as i64,
        profile.d.unwrap_or(0) as i64,
    )
}

/// Ballot paths avoiding a depth-0 pattern with a single bifix:
/// `s_n(m) = s_{n-1}(m) + s_n(m-1) - sum_i (-1)^i s_{n-a-bi}(m-c-di)`.
pub fn table_bifix1(p: &Pattern, n_max: usize, m_max: usize) -> Result<CountTable> {
    let profile = p.classify();
    if profile.class != PatternClass::BifixIndex1Depth0 {
        return Err(wrong_class("table_bifix1", &profile, "BifixIndex1Depth0"));
    }
    let (a, c, b, d) = bifix_params(&profile);
    Ok(fill_ballot(n_max, m_max, 0, |t, n, m| {
        overlap_correction(t, n, m, a, c, b, d)
    }))
}

/// Ballot paths avoiding a pattern of depth `δ >= 1` and bifix index 0 or 1.
///
/// Strictly between `y = x` and `y = x + δ` no path can contain the pattern,
/// so the plain ballot recurrence applies there; weakly above `y = x + δ`
/// the pattern correction is subtracted.
pub fn table_depth_positive(p: &Pattern, n_max: usize, m_max: usize) -> Result<CountTable> {
    let profile = p.classify();
    let PatternClass::DepthPositive { depth, bifix_index } = profile.class else {
        return Err(wrong_class(
            "table_depth_positive",
            &profile,
            "DepthPositive",
        ));
    };
    let (a, c, b, d) = bifix_params(&profile);
    let depth = depth as i64;
    Ok(fill_ballot(n_max, m_max, depth, |t, n, m| {
        if bifix_index == 0 {
            cell(t, n - a, m - c)
        } else {
            overlap_correction(t, n, m, a, c, b, d)
        }
    }))
}

/// Fills a ballot table (`l = 0`) with `D(n, m) = D(n-1, m) + D(n, m-1)`,
/// minus `correction(n, m)` whenever `m >= n + threshold`.
fn fill_ballot<F>(n_max: usize, m_max: usize, threshold: i64, correction: F) -> CountTable
where
    F: Fn(&CountTable, i64, i64) -> Count,
{
    let mut t = CountTable::new(n_max, m_max, 0);
    for m in 0..=m_max {
        for n in 0..=n_max.min(m) {
            let (ni, mi) = (n as i64, m as i64);
            let mut v = cell(&t, ni - 1, mi) + cell(&t, ni, mi - 1);
            if mi >= ni + threshold {
                v -= correction(&t, ni, mi);
            }
            t.set(n, m, v, Region::PathCount);
        }
    }
    t
}

fn table_value(table: &CountTable, n: i64, m: i64) -> Result<Count> {
    if n < 0 {
        return Ok(Count::zero());
    }
    if !table.contains(n, m) {
        return Err(Error::OutOfTable { n, m });
    }
    Ok(cell(table, n, m))
}

fn signed_binomial(top: i64, bottom: i64, negative: bool) -> Count {
    let v = Count::from(binomial(top as u64, bottom as u64));
    if negative {
        -v
    } else {
        v
    }
}

/// Checks the initial-value identity for depth-`δ` tables:
///
/// `D(n, n+j-1) = sum_{i=1}^{⌊j/2⌋} C(j-i, i) (-1)^{i-1} D(n-i, n-i+j-1)
///              + sum_{i=1}^{⌊(j+1)/2⌋} C(j-i, i-1) (-1)^{i-1} D(n-i, n-i+j)`
///
/// for `1 <= j <= δ` and `n >= 1`. Cells at negative `n` count as zero.
pub fn check_initial_value_lemma(
    table: &CountTable,
    depth: usize,
    n: usize,
    j: usize,
) -> Result<bool> {
    if !(1..=depth).contains(&j) || n == 0 {
        return Err(Error::InvalidArgument {
            operation: "check_initial_value_lemma",
            reason: format!("need 1 <= j <= {depth} and n >= 1, got j = {j}, n = {n}"),
        });
    }
    let (n, j) = (n as i64, j as i64);
    let mut rhs = Count::zero();
    for i in 1..=j / 2 {
        rhs += signed_binomial(j - i, i, i % 2 == 0) * table_value(table, n - i, n - i + j - 1)?;
    }
    for i in 1..=(j + 1) / 2 {
        rhs += signed_binomial(j - i, i - 1, i % 2 == 0) * table_value(table, n - i, n - i + j)?;
    }
    Ok(table_value(table, n, n + j - 1)? == rhs)
}

/// Expresses `D(n, n+δ-1-j)`, for `0 <= j <= δ-1`, through the cells weakly
/// above `y = x + δ - 1`:
///
/// `sum_{i=0}^{⌊j/2⌋} C(j-i, i) (-1)^i s_{n-i}(n-i+δ-1)
///  + sum_{i=1}^{⌊(j+1)/2⌋} C(j-i, i-1) (-1)^i s_{n-i}(n-i+δ)`.
pub fn near_diagonal_expansion(
    table: &CountTable,
    depth: usize,
    n: usize,
    j: usize,
) -> Result<Count> {
    if depth == 0 || j >= depth {
        return Err(Error::InvalidArgument {
            operation: "near_diagonal_expansion",
            reason: format!("need 0 <= j <= depth - 1, got j = {j}, depth = {depth}"),
        });
    }
    let (n, j, depth) = (n as i64, j as i64, depth as i64);
    let mut total = Count::zero();
    for i in 0..=j / 2 {
        total +=
            signed_binomial(j - i, i, i % 2 == 1) * table_value(table, n - i, n - i + depth - 1)?;
    }
    for i in 1..=(j + 1) / 2 {
        total +=
            signed_binomial(j - i, i - 1, i % 2 == 1) * table_value(table, n - i, n - i + depth)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::dp_table;
    use crate::pattern::parse_pattern;

    fn p(s: &str) -> Pattern {
        parse_pattern(s).unwrap()
    }

    fn at(t: &CountTable, n: usize, m: usize) -> i64 {
        t.get(n, m).try_into().unwrap()
    }

    fn assert_matches_oracle(t: &CountTable, pat: &Pattern) {
        let oracle = dp_table(pat, t.n_max(), t.m_max(), t.l());
        for (n, m, v, region) in t.iter() {
            if region == Region::PathCount {
                assert_eq!(v, oracle.get(n, m), "{pat} at ({n}, {m})");
            }
        }
    }

    #[test]
    fn ra_table_cells() {
        let t = table_ra(4, 5, 9, 4, true).unwrap();
        assert_eq!(at(&t, 5, 4), 101);
        assert_eq!(at(&t, 9, 2), -16);
        assert_eq!(at(&t, 9, 0), -11);
        assert_eq!(at(&t, 8, 0), -3);
        assert_eq!(t.region(9, 3), Region::ForcedZero);
        assert_eq!(t.region(9, 2), Region::Extension);
        assert_matches_oracle(&t, &p("rrrr"));
    }

    #[test]
    fn ra_table_without_extension() {
        let t = table_ra(4, 5, 9, 4, false).unwrap();
        assert_eq!(at(&t, 9, 2), 0);
        assert_eq!(t.region(9, 2), Region::ForcedZero);
        assert!(matches!(
            table_ra(1, 0, 3, 3, false),
            Err(Error::InvalidArgument { .. })
        ));
    }

    #[test]
    fn ra_a2_diagonal_is_one() {
        let t = table_ra(2, 0, 8, 8, false).unwrap();
        for n in 0..=8 {
            assert_eq!(at(&t, n, n), 1);
        }
    }

    #[test]
    fn extension_satisfies_forward_recurrence() {
        let t = table_ra(4, 5, 9, 4, true).unwrap();
        let get = |n: i64, m: i64| {
            if n < 0 {
                Count::zero()
            } else {
                t.get(n as usize, m as usize).clone()
            }
        };
        for m in 1..=4i64 {
            for n in 0..=9i64 {
                assert_eq!(
                    get(n, m),
                    get(n - 1, m) + get(n, m - 1) - get(n - 4, m - 1),
                    "({n}, {m})"
                );
            }
        }
    }

    #[test]
    fn bifix_free_tables() {
        let t = table_bifix_free(&p("urr"), 8, 8).unwrap();
        assert_eq!(at(&t, 2, 2), 1);
        assert_eq!(at(&t, 3, 3), 1);
        for m in 0..=8 {
            assert_eq!(at(&t, 0, m), 1);
        }
        let pat = p("uurrurrur");
        assert_matches_oracle(&table_bifix_free(&pat, 8, 8).unwrap(), &pat);
        assert!(matches!(
            table_bifix_free(&p("rur"), 3, 3),
            Err(Error::WrongClass { .. })
        ));
    }

    #[test]
    fn bifix1_tables() {
        let t = table_bifix1(&p("urruurr"), 9, 8).unwrap();
        let row5: Vec<i64> = (0..=6).map(|n| at(&t, n, 5)).collect();
        assert_eq!(row5, [1, 5, 14, 28, 40, 38, 0]);
        assert_eq!(at(&t, 8, 8), 1236);
        assert_eq!(at(&table_bifix1(&p("rur"), 2, 2).unwrap(), 2, 2), 1);
        assert_matches_oracle(&t, &p("urruurr"));
        assert!(matches!(
            table_bifix1(&p("urr"), 3, 3),
            Err(Error::WrongClass { .. })
        ));
    }

    #[test]
    fn depth_positive_tables() {
        let t = table_depth_positive(&p("rrruuurrruu"), 10, 12).unwrap();
        assert_eq!(at(&t, 10, 10), 16751);
        assert_eq!(at(&t, 9, 9), 4854);
        assert_eq!(at(&t, 8, 8), 1429);
        assert_eq!(at(&t, 9, 11), 41816);
        assert_eq!(at(&t, 10, 11), 58567);
        assert_matches_oracle(&t, &p("rrruuurrruu"));

        let pat = p("rruur");
        assert_matches_oracle(&table_depth_positive(&pat, 10, 10).unwrap(), &pat);
    }

    #[test]
    fn ballot_region_below_depth_line() {
        let t = table_depth_positive(&p("rrruuurrruu"), 10, 12).unwrap();
        for n in 1..=10usize {
            for m in n..n + 2 {
                assert_eq!(t.get(n, m).clone(), t.get(n - 1, m) + t.get(n, m - 1));
            }
        }
    }

    #[test]
    fn ra_extension_taller_than_table() {
        let wide = table_ra(3, 1, 12, 2, true).unwrap();
        let tall = table_ra(3, 1, 12, 10, true).unwrap();
        for (n, m, v, region) in wide.iter() {
            assert_eq!(v, tall.get(n, m));
            assert_eq!(region, tall.region(n, m));
        }
    }

    #[test]
    fn initial_value_lemma() {
        let t = table_depth_positive(&p("rrruuurrruu"), 10, 12).unwrap();
        for n in 1..=10 {
            for j in 1..=2 {
                assert!(
                    check_initial_value_lemma(&t, 2, n, j).unwrap(),
                    "n={n} j={j}"
                );
            }
        }
        // δ = 2 reduces to s_n(n+1) = s_{n-1}(n) + s_{n-1}(n+1)
        assert_eq!(at(&t, 10, 11), at(&t, 9, 10) + at(&t, 9, 11));
        // D(1, j) = j
        for j in 1..=2 {
            assert_eq!(at(&t, 1, j), j as i64);
        }
        assert!(check_initial_value_lemma(&t, 2, 1, 3).is_err());
        assert!(check_initial_value_lemma(&t, 2, 11, 1).is_err());
    }

    #[test]
    fn near_diagonal() {
        let t = table_depth_positive(&p("rrruuurrruu"), 10, 12).unwrap();
        // D(10,10) = s_10(11) - s_9(11) = 58567 - 41816
        assert_eq!(near_diagonal_expansion(&t, 2, 10, 1).unwrap(), 16751.into());
        for n in 0..=10 {
            assert_eq!(
                &near_diagonal_expansion(&t, 2, n, 0).unwrap(),
                t.get(n, n + 1)
            );
            assert_eq!(&near_diagonal_expansion(&t, 2, n, 1).unwrap(), t.get(n, n));
        }
        let t = table_depth_positive(&p("rruur"), 10, 11).unwrap();
        for n in 0..=10 {
            assert_eq!(&near_diagonal_expansion(&t, 1, n, 0).unwrap(), t.get(n, n));
        }
        assert!(near_diagonal_expansion(&t, 1, 3, 1).is_err());
    }
}
