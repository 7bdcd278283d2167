//! Cross-checks between the independent counting routes.
//!
//! Each property runs over every pattern up to a maximum length and every
//! point up to a table size, and reports pass, fail, or a documented known
//! issue (a printed formula that is deliberately not used for counting).

use std::fmt;

use num_traits::Zero;

use crate::closedform::{self, DEPTH2_EXAMPLE};
use crate::dispatch::{self, Method};
use crate::golden;
use crate::oracle::{self, dp_table, PathQuery, EXHAUSTIVE_LIMIT};
use crate::pattern::{parse_pattern, Pattern, PatternClass, Step};
use crate::table::Region;
use crate::{Count, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Longest pattern enumerated.
    pub max_pattern_len: usize,
    /// Largest `n` and `m` in table checks.
    pub n_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_pattern_len: 6,
            n_max: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    KnownIssue(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checks: usize,
    pub status: Status,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        !matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "pass        {} ({} checks)", self.name, self.checks),
            Status::Fail(why) => write!(
                f,
                "FAIL        {} ({} checks): {why}",
                self.name, self.checks
            ),
            Status::KnownIssue(why) => write!(
                f,
                "known-issue {} ({} checks): {why}",
                self.name, self.checks
            ),
        }
    }
}

/// Every pattern of length `1..=max_len`.
pub fn all_patterns(max_len: usize) -> Vec<Pattern> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for bits in 0u64..(1 << len) {
            let steps = (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 1 {
                        Step::R
                    } else {
                        Step::U
                    }
                })
                .collect();
            out.extend(Pattern::from_steps(steps));
        }
    }
    out
}

/// Counts checks and remembers the first failure.
struct Tally {
    name: &'static str,
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally {
            name,
            checks: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn fail(&mut self, detail: String) {
        self.check(false, || detail);
    }

    fn report(self) -> PropertyReport {
        PropertyReport {
            name: self.name,
            checks: self.checks,
            status: self.failure.map_or(Status::Pass, Status::Fail),
        }
    }
}

const OFFSETS: [usize; 4] = [0, 1, 2, 5];

fn bifix_definitions(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("bifix definition matches failure function");
    for p in all_patterns(cfg.max_pattern_len.max(6)) {
        t.check(p.bifixes() == p.bifixes_by_failure(), || format!("{p}"));
    }
    t.report()
}

fn oracle_equivalence(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("exhaustive enumeration matches automaton");
    let total = (2 * cfg.n_max).min(12).min(EXHAUSTIVE_LIMIT);
    for p in all_patterns(cfg.max_pattern_len.min(5)) {
        for l in OFFSETS {
            let table = dp_table(&p, total, total, l);
            for n in 0..=total {
                for m in 0..=total - n {
                    let q = PathQuery::new(p.clone(), n, m, l);
                    match oracle::count_exhaustive(&q) {
                        Ok(v) => t.check(&v == table.get(n, m), || {
                            format!("{p} at ({n}, {m}), l = {l}: {v} vs {}", table.get(n, m))
                        }),
                        Err(e) => t.fail(e.to_string()),
                    }
                }
            }
        }
    }
    t.report()
}

fn recurrences(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("recurrence tables match automaton");
    let size = cfg.n_max;
    let mut patterns = all_patterns(cfg.max_pattern_len);
    patterns.push(parse_pattern(DEPTH2_EXAMPLE).expect("constant pattern"));
    for p in patterns {
        let profile = p.classify();
        for l in OFFSETS {
            if dispatch::recurrence_gap(&profile, l).is_some() {
                continue;
            }
            match dispatch::recurrence_table(&profile, size, size, l, false) {
                Ok(table) => {
                    let oracle = dp_table(&p, size, size, l);
                    for (n, m, v, _) in table.iter() {
                        t.check(v == oracle.get(n, m), || {
                            format!("{p} at ({n}, {m}), l = {l}: {v} vs {}", oracle.get(n, m))
                        });
                    }
                }
                Err(e) => t.fail(format!("{p}: {e}")),
            }
        }
    }
    t.report()
}

fn closed_forms(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("closed forms match automaton (exact, integral)");
    let size = cfg.n_max;
    let mut patterns = all_patterns(cfg.max_pattern_len);
    patterns.push(parse_pattern(DEPTH2_EXAMPLE).expect("constant pattern"));
    for p in patterns {
        let profile = p.classify();
        for l in OFFSETS {
            let oracle = dp_table(&p, size + l, size, l);
            for n in 0..=size + l {
                for m in 0..=size {
                    if m + l < n || dispatch::formula_gap(&profile, n, m, l).is_some() {
                        continue;
                    }
                    match dispatch::count_profile(&profile, n, m, l, Method::Formula) {
                        Ok(v) => t.check(&v == oracle.get(n, m), || {
                            format!("{p} at ({n}, {m}), l = {l}: {v} vs {}", oracle.get(n, m))
                        }),
                        Err(e) => t.fail(format!("{p} at ({n}, {m}), l = {l}: {e}")),
                    }
                }
            }
        }
    }
    t.report()
}

fn reversal(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("reversal: D(n, n+l; p) = D(n+l, n; reverse p) above y = x - l");
    let bound = cfg.n_max.max(12);
    for p in all_patterns(cfg.max_pattern_len.min(5)) {
        let rev = p.reverse();
        let direct = dp_table(&p, bound, bound, 0);
        for l in 0..=bound {
            let reflected = dp_table(&rev, bound, bound - l, l);
            for n in 0..=bound - l {
                t.check(direct.get(n, n + l) == reflected.get(n + l, n), || {
                    format!("{p} vs {rev} at n = {n}, l = {l}")
                });
            }
        }
    }
    t.report()
}

fn catalan(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("long patterns leave ballot numbers unchanged");
    for p in all_patterns(cfg.max_pattern_len) {
        for l in OFFSETS {
            let table = dp_table(&p, cfg.n_max, cfg.n_max, l);
            for n in 0..=cfg.n_max {
                for m in 0..=cfg.n_max {
                    if n + m < p.len() {
                        let expected = oracle::ballot_count(n, m, l);
                        t.check(table.get(n, m) == &expected, || {
                            format!("{p} at ({n}, {m}), l = {l}")
                        });
                    }
                }
            }
        }
    }
    t.report()
}

fn monotone_in_l(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("counts are non-decreasing in l");
    for p in all_patterns(cfg.max_pattern_len.min(4)) {
        let tables: Vec<_> = (0..=4)
            .map(|l| dp_table(&p, cfg.n_max, cfg.n_max, l))
            .collect();
        for pair in tables.windows(2) {
            for (n, m, v, _) in pair[0].iter() {
                t.check(v <= pair[1].get(n, m), || {
                    format!("{p} at ({n}, {m}), l = {}", pair[0].l())
                });
            }
        }
    }
    t.report()
}

fn depth_lemmas(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("initial-value identity and near-diagonal expansion");
    let size = cfg.n_max;
    let mut patterns = all_patterns(cfg.max_pattern_len);
    patterns.push(parse_pattern(DEPTH2_EXAMPLE).expect("constant pattern"));
    for p in patterns {
        let profile = p.classify();
        let PatternClass::DepthPositive { depth, .. } = profile.class else {
            continue;
        };
        let table = dp_table(&p, size, size + depth, 0);
        for n in 1..=size {
            for j in 1..=depth {
                match crate::recurrence::check_initial_value_lemma(&table, depth, n, j) {
                    Ok(ok) => t.check(ok, || format!("initial values for {p} at n = {n}, j = {j}")),
                    Err(e) => t.fail(format!("{p}: {e}")),
                }
            }
        }
        for n in 0..=size {
            for j in 0..depth {
                match crate::recurrence::near_diagonal_expansion(&table, depth, n, j) {
                    Ok(v) => {
                        let direct = table.get(n, n + depth - 1 - j);
                        t.check(&v == direct, || {
                            format!("expansion for {p} at n = {n}, j = {j}")
                        });
                    }
                    Err(e) => t.fail(format!("{p}: {e}")),
                }
            }
        }
    }
    t.report()
}

fn uuru_uruu(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("uuru and uruu are avoided by the same number of ballot paths");
    let a = dp_table(
        &parse_pattern("uuru").expect("constant"),
        cfg.n_max,
        cfg.n_max,
        0,
    );
    let b = dp_table(
        &parse_pattern("uruu").expect("constant"),
        cfg.n_max,
        cfg.n_max,
        0,
    );
    for (n, m, v, _) in a.iter() {
        t.check(v == b.get(n, m), || format!("({n}, {m})"));
    }
    t.report()
}

fn extension(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("r^a extension keeps the recurrence below the boundary");
    for a in 2..=5usize {
        for l in OFFSETS {
            let size = cfg.n_max;
            let table = match crate::recurrence::table_ra(a, l, size, size, true) {
                Ok(table) => table,
                Err(e) => {
                    t.fail(e.to_string());
                    continue;
                }
            };
            let at = |n: i64, m: i64| -> Count {
                if n < 0 {
                    Count::zero()
                } else {
                    table.get(n as usize, m as usize).clone()
                }
            };
            for (n, m, v, region) in table.iter() {
                if region != Region::Extension || m == size {
                    continue;
                }
                // s_n(m) = s_n(m+1) - s_{n-1}(m+1) + s_{n-a}(m)
                let (ni, mi) = (n as i64, m as i64);
                let expected = at(ni, mi + 1) - at(ni - 1, mi + 1) + at(ni - a as i64, mi);
                t.check(v == &expected, || format!("a = {a}, l = {l} at ({n}, {m})"));
            }
        }
    }
    t.report()
}

fn golden_tables() -> PropertyReport {
    let mut t = Tally::new("reference tables reproduce");
    for golden in golden::golden_tables() {
        match golden.build() {
            Ok(table) => {
                let diff = golden.diff(&table);
                t.checks += golden.cells.len() - 1;
                t.check(diff.is_empty(), || {
                    let d = &diff[0];
                    format!(
                        "{} at ({}, {}): expected {}, got {:?}",
                        golden.name, d.n, d.m, d.expected, d.actual
                    )
                });
            }
            Err(e) => t.fail(format!("{}: {e}", golden.name)),
        }
    }
    t.report()
}

fn rpr_shortcut(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("rp'r shortcut sum");
    let mut first_discrepancy = None;
    for p in all_patterns(cfg.max_pattern_len) {
        let profile = p.classify();
        let (Some(b), Some(d)) = (profile.b, profile.d) else {
            continue;
        };
        if profile.class != PatternClass::BifixIndex1Depth0 || profile.a != b + 1 || profile.c != d
        {
            continue;
        }
        for n in 0..=cfg.n_max {
            for m in n..=cfg.n_max {
                match closedform::rpr_special_s(&profile, n, m as i64) {
                    Ok(eval) => {
                        t.checks += 1;
                        if first_discrepancy.is_none() {
                            first_discrepancy = eval
                                .discrepancy()
                                .map(|d| format!("{p} at ({n}, {m}): {d}"));
                        }
                    }
                    // a zero denominator on a nonzero term is itself a discrepancy
                    Err(e) => {
                        t.checks += 1;
                        if first_discrepancy.is_none() {
                            first_discrepancy = Some(format!("{p} at ({n}, {m}): {e}"));
                        }
                    }
                }
            }
        }
    }
    let mut report = t.report();
    if let Some(d) = first_discrepancy {
        report.status = Status::KnownIssue(format!("not used for counting; {d}"));
    }
    report
}

fn uuru_diagonal(cfg: &VerifyConfig) -> PropertyReport {
    let mut t = Tally::new("printed uuru sum on the diagonal");
    let table = dp_table(
        &parse_pattern("uuru").expect("constant"),
        cfg.n_max,
        2 * cfg.n_max,
        0,
    );
    let mut first_discrepancy = None;
    for n in 0..=cfg.n_max {
        for l in 0..=cfg.n_max {
            let expected = ExactRational::from_integer(table.get(n, n + l).clone());
            match closedform::uuru_formula(n, l) {
                Ok(v) => {
                    if l == 0 {
                        t.checks += 1;
                        if v != expected && first_discrepancy.is_none() {
                            first_discrepancy = Some(format!(
                                "at n = {n}, l = 0 the sum gives {v}, the count is {expected}"
                            ));
                        }
                    } else {
                        t.check(v == expected, || {
                            format!("n = {n}, l = {l}: {v} vs {expected}")
                        });
                    }
                }
                Err(e) => t.fail(format!("n = {n}, l = {l}: {e}")),
            }
        }
    }
    let mut report = t.report();
    if let (Status::Pass, Some(d)) = (&report.status, first_discrepancy) {
        report.status =
            Status::KnownIssue(format!("diagonal routed through D(n, n) = D(n-1, n); {d}"));
    }
    report
}

/// Runs the full property suite.
pub fn run(cfg: &VerifyConfig) -> Vec<PropertyReport> {
    vec![
        bifix_definitions(cfg),
        oracle_equivalence(cfg),
        recurrences(cfg),
        closed_forms(cfg),
        reversal(cfg),
        catalan(cfg),
        monotone_in_l(cfg),
        depth_lemmas(cfg),
        uuru_uruu(cfg),
        extension(cfg),
        golden_tables(),
        rpr_shortcut(cfg),
        uuru_diagonal(cfg),
    ]
}

pub fn all_passed(reports: &[PropertyReport]) -> bool {
    reports.iter().all(PropertyReport::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_patterns() {
        assert_eq!(all_patterns(3).len(), 2 + 4 + 8);
        assert_eq!(all_patterns(1)[0].to_string(), "u");
    }

    #[test]
    fn small_suite_passes_with_known_issues() {
        let reports = run(&VerifyConfig {
            max_pattern_len: 4,
            n_max: 6,
        });
        for r in &reports {
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0, "{r}");
        }
        let known: Vec<_> = reports
            .iter()
            .filter(|r| matches!(r.status, Status::KnownIssue(_)))
            .map(|r| r.name)
            .collect();
        assert_eq!(
            known,
            ["rp'r shortcut sum", "printed uuru sum on the diagonal"]
        );
    }
}
