//! Choosing a counting method for a query or a table.
//!
//! `auto` prefers a closed form when the pattern's class has one and the
//! point is in its domain, then the class recurrence, then the automaton
//! dynamic program, which always applies.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::closedform;
use crate::error::{Error, Result};
use crate::oracle::{self, PathQuery};
use crate::pattern::{Length4, Pattern, PatternClass, PatternProfile};
use crate::recurrence;
use crate::table::{CountTable, Region};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Auto,
    Oracle,
    Recurrence,
    Formula,
}

impl Method {
    /// The concrete methods, in `auto` preference order.
    pub const CONCRETE: [Method; 3] = [Method::Formula, Method::Recurrence, Method::Oracle];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Oracle => "oracle",
            Method::Recurrence => "recurrence",
            Method::Formula => "formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "auto" => Ok(Method::Auto),
            "oracle" => Ok(Method::Oracle),
            "recurrence" => Ok(Method::Recurrence),
            "formula" => Ok(Method::Formula),
            other => Err(Error::InvalidArgument {
                operation: "method",
                reason: format!("unknown method {other:?}"),
            }),
        }
    }
}

fn not_applicable(method: Method, reason: String) -> Error {
    Error::MethodNotApplicable {
        method: method.as_str(),
        reason,
    }
}

/// Why no closed form covers `(n, m, l)` for this pattern, or `None` if one
/// does. Points below the boundary are excluded; they are answered as zero
/// before any method runs.
pub fn formula_gap(profile: &PatternProfile, n: usize, m: usize, l: usize) -> Option<String> {
    let diagonal_only =
        || (l != 0).then(|| format!("no closed form for {} with l > 0", profile.class));
    match &profile.class {
        PatternClass::PureRight(a) if *a >= 2 => (m + l != n)
            .then(|| "closed forms for r^a cover only the boundary point m = n - l".to_string()),
        PatternClass::PureUp(_) => diagonal_only(),
        PatternClass::BifixFreeDepth0
        | PatternClass::BifixIndex1Depth0
        | PatternClass::Length4Special(_) => diagonal_only(),
        PatternClass::DepthPositive { .. } => {
            if !profile.pattern.is_text(closedform::DEPTH2_EXAMPLE) {
                Some(format!(
                    "no closed form for depth-positive patterns other than {}",
                    closedform::DEPTH2_EXAMPLE
                ))
            } else if l != 0 || m < n + 1 {
                Some("the depth-2 closed form covers l = 0 and m >= n + 1".to_string())
            } else {
                None
            }
        }
        other => Some(format!("no closed form for {other}")),
    }
}

/// Why no class recurrence covers this pattern and boundary, or `None`.
pub fn recurrence_gap(profile: &PatternProfile, l: usize) -> Option<String> {
    match &profile.class {
        PatternClass::PureRight(a) if *a >= 2 => None,
        PatternClass::BifixFreeDepth0
        | PatternClass::BifixIndex1Depth0
        | PatternClass::DepthPositive { .. } => (l != 0).then(|| {
            format!(
                "the recurrence for {} is for ballot paths (l = 0)",
                profile.class
            )
        }),
        other => Some(format!("no class recurrence for {other}")),
    }
}

fn formula_value(profile: &PatternProfile, n: usize, m: usize, l: usize) -> Result<Count> {
    if let Some(reason) = formula_gap(profile, n, m, l) {
        return Err(not_applicable(Method::Formula, reason));
    }
    let x = m as i64;
    match &profile.class {
        PatternClass::PureRight(a) if l == 0 => closedform::ra_diagonal(*a, m),
        PatternClass::PureRight(a) => closedform::ra_boundary(*a, l, m),
        PatternClass::PureUp(c) => closedform::uc_count(*c, n, m),
        PatternClass::BifixFreeDepth0 => closedform::bifixfree_s(profile, n, x),
        PatternClass::BifixIndex1Depth0 => closedform::bifix1_s(profile, n, x),
        PatternClass::DepthPositive { .. } => closedform::depth2_example_s(n, (m - n) as i64),
        PatternClass::Length4Special(w) => match w {
            Length4::Ruuu => Ok(closedform::ruuu_count(n, m - n)),
            Length4::Uuur => closedform::uuur_count(n, m - n),
            Length4::Uuru | Length4::Uruu => closedform::uuru_count(n, m - n),
        },
        _ => unreachable!("formula_gap covers the remaining classes"),
    }
}

/// Builds the class recurrence table of the given extent.
pub fn recurrence_table(
    profile: &PatternProfile,
    n_max: usize,
    m_max: usize,
    l: usize,
    extend: bool,
) -> Result<CountTable> {
    if let Some(reason) = recurrence_gap(profile, l) {
        return Err(not_applicable(Method::Recurrence, reason));
    }
    if extend && !matches!(profile.class, PatternClass::PureRight(_)) {
        return Err(Error::InvalidArgument {
            operation: "table",
            reason: "the extension below the boundary exists only for r^a".into(),
        });
    }
    let p = &profile.pattern;
    match &profile.class {
        PatternClass::PureRight(a) => recurrence::table_ra(*a, l, n_max, m_max, extend),
        PatternClass::BifixFreeDepth0 => recurrence::table_bifix_free(p, n_max, m_max),
        PatternClass::BifixIndex1Depth0 => recurrence::table_bifix1(p, n_max, m_max),
        PatternClass::DepthPositive { .. } => recurrence::table_depth_positive(p, n_max, m_max),
        _ => unreachable!("recurrence_gap covers the remaining classes"),
    }
}

/// Concrete methods that can answer `(n, m, l)`, in preference order.
pub fn applicable_methods(profile: &PatternProfile, n: usize, m: usize, l: usize) -> Vec<Method> {
    let below = m + l < n;
    let mut methods = Vec::new();
    if below || formula_gap(profile, n, m, l).is_none() {
        methods.push(Method::Formula);
    }
    if below || recurrence_gap(profile, l).is_none() {
        methods.push(Method::Recurrence);
    }
    methods.push(Method::Oracle);
    methods
}

/// Counts paths to `(n, m)` weakly above `y = x - l` avoiding `p`.
pub fn count(p: &Pattern, n: usize, m: usize, l: usize, method: Method) -> Result<Count> {
    count_profile(&p.classify(), n, m, l, method)
}

pub fn count_profile(
    profile: &PatternProfile,
    n: usize,
    m: usize,
    l: usize,
    method: Method,
) -> Result<Count> {
    if m + l < n {
        return Ok(Count::zero());
    }
    match method {
        Method::Auto => {
            let first = applicable_methods(profile, n, m, l)[0];
            count_profile(profile, n, m, l, first)
        }
        Method::Formula => formula_value(profile, n, m, l),
        Method::Recurrence => Ok(recurrence_table(profile, n, m, l, false)?.get(n, m).clone()),
        Method::Oracle => Ok(oracle::count_dp(&PathQuery::new(
            profile.pattern.clone(),
            n,
            m,
            l,
        ))),
    }
}

/// Result of running every applicable method on one query.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifiedCount {
    pub value: Count,
    pub by_method: Vec<(Method, Count)>,
}

/// Runs all applicable methods and fails with [`Error::Mismatch`] unless
/// they agree.
pub fn count_verified(p: &Pattern, n: usize, m: usize, l: usize) -> Result<VerifiedCount> {
    let profile = p.classify();
    let mut by_method = Vec::new();
    for method in applicable_methods(&profile, n, m, l) {
        by_method.push((method, count_profile(&profile, n, m, l, method)?));
    }
    let value = by_method[0].1.clone();
    if by_method.iter().any(|(_, v)| *v != value) {
        let details = by_method
            .iter()
            .map(|(method, v)| format!("{method}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::Mismatch { n, m, l, details });
    }
    Ok(VerifiedCount { value, by_method })
}

/// Where a table's cells came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSource {
    Recurrence,
    Formula,
    Oracle,
}

impl TableSource {
    pub fn as_str(self) -> &'static str {
        match self {
            TableSource::Recurrence => "recurrence",
            TableSource::Formula => "formula",
            TableSource::Oracle => "oracle",
        }
    }
}

/// Builds a table with the class recurrence when there is one, otherwise
/// from closed forms when they cover every path-count cell, otherwise with
/// the automaton dynamic program.
pub fn build_table(
    p: &Pattern,
    n_max: usize,
    m_max: usize,
    l: usize,
    extend: bool,
) -> Result<(CountTable, TableSource)> {
    let profile = p.classify();
    if recurrence_gap(&profile, l).is_none() {
        return Ok((
            recurrence_table(&profile, n_max, m_max, l, extend)?,
            TableSource::Recurrence,
        ));
    }
    if extend {
        return Err(Error::InvalidArgument {
            operation: "table",
            reason: "the extension below the boundary exists only for r^a with a >= 2".into(),
        });
    }
    let mut table = CountTable::new(n_max, m_max, l);
    let covered = (0..=m_max)
        .flat_map(|m| (0..=n_max).map(move |n| (n, m)))
        .filter(|&(n, m)| table.in_boundary(n, m))
        .all(|(n, m)| formula_gap(&profile, n, m, l).is_none());
    if covered {
        for m in 0..=m_max {
            for n in 0..=n_max {
                if table.in_boundary(n, m) {
                    table.set(n, m, formula_value(&profile, n, m, l)?, Region::PathCount);
                }
            }
        }
        return Ok((table, TableSource::Formula));
    }
    Ok((oracle::dp_table(p, n_max, m_max, l), TableSource::Oracle))
}
