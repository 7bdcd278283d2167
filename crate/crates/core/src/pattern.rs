//! Patterns over the step set {u, r} and the structure that decides how they
//! can be counted.
//!
//! The quantities that matter are the dimensions `a x c` (number of `r` and
//! `u` steps), the depth (how far the pattern can reach below `y = x` when
//! its end sits on the diagonal) and the bifixes (nonempty proper borders).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Up, `(x, y) -> (x, y + 1)`.
    U,
    /// Right, `(x, y) -> (x + 1, y)`.
    R,
}

impl Step {
    pub fn reflect(self) -> Step {
        match self {
            Step::U => Step::R,
            Step::R => Step::U,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'u',
            Step::R => 'r',
        }
    }

    pub fn from_char(ch: char) -> Option<Step> {
        match ch {
            'u' | 'U' => Some(Step::U),
            'r' | 'R' => Some(Step::R),
            _ => None,
        }
    }
}

/// A nonempty string of steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    steps: Vec<Step>,
}

/// Parses `u`/`r` text (either case) into a pattern. Surrounding whitespace
/// is ignored.
pub fn parse_pattern(text: &str) -> Result<Pattern> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let steps = text
        .chars()
        .enumerate()
        .map(|(pos, ch)| Step::from_char(ch).ok_or(Error::InvalidStep { ch, pos }))
        .collect::<Result<Vec<_>>>()?;
    Ok(Pattern { steps })
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern(s)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

fn depth_of(steps: &[Step]) -> usize {
    // The empty suffix contributes 0.
    let mut best = 0i64;
    let mut acc = 0i64;
    for step in steps.iter().rev() {
        acc += match step {
            Step::U => 1,
            Step::R => -1,
        };
        best = best.max(acc);
    }
    best as usize
}

impl Pattern {
    /// Builds a pattern from steps. Returns `None` for an empty slice.
    pub fn from_steps(steps: Vec<Step>) -> Option<Pattern> {
        if steps.is_empty() {
            None
        } else {
            Some(Pattern { steps })
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// `(a, c)`: the number of `r` steps and the number of `u` steps.
    pub fn dimensions(&self) -> (usize, usize) {
        let a = self.steps.iter().filter(|&&s| s == Step::R).count();
        (a, self.steps.len() - a)
    }

    /// Maximum of `#u - #r` over all suffixes, the empty one included.
    pub fn depth(&self) -> usize {
        depth_of(&self.steps)
    }

    /// All nonempty proper prefixes that are also suffixes, shortest first.
    ///
    /// This is the definitional quadratic comparison; see
    /// [`Pattern::bifixes_by_failure`] for the linear construction.
    pub fn bifixes(&self) -> Vec<Pattern> {
        let len = self.steps.len();
        (1..len)
            .filter(|&k| self.steps[..k] == self.steps[len - k..])
            .map(|k| Pattern {
                steps: self.steps[..k].to_vec(),
            })
            .collect()
    }

    /// Bifixes via the failure function: the borders of the pattern are the
    /// chain `f(L), f(f(L)), ...` of longest proper borders.
    pub fn bifixes_by_failure(&self) -> Vec<Pattern> {
        let fail = failure_function(&self.steps);
        let mut lengths = Vec::new();
        let mut k = fail[self.steps.len() - 1];
        while k > 0 {
            lengths.push(k);
            k = fail[k - 1];
        }
        lengths.reverse();
        lengths
            .into_iter()
            .map(|k| Pattern {
                steps: self.steps[..k].to_vec(),
            })
            .collect()
    }

    pub fn bifix_index(&self) -> usize {
        self.bifixes().len()
    }

    /// Reflect every step (`u <-> r`) and read backwards.
    pub fn reverse(&self) -> Pattern {
        Pattern {
            steps: self.steps.iter().rev().map(|s| s.reflect()).collect(),
        }
    }

    pub fn classify(&self) -> PatternProfile {
        PatternProfile::new(self)
    }

    pub(crate) fn is_text(&self, text: &str) -> bool {
        self.steps.len() == text.len()
            && self
                .steps
                .iter()
                .zip(text.chars())
                .all(|(s, ch)| s.as_char() == ch)
    }
}

/// `fail[i]` is the length of the longest proper border of `steps[..=i]`.
pub(crate) fn failure_function(steps: &[Step]) -> Vec<usize> {
    let mut fail = vec![0; steps.len()];
    let mut k = 0;
    for i in 1..steps.len() {
        while k > 0 && steps[k] != steps[i] {
            k = fail[k - 1];
        }
        if steps[k] == steps[i] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// The four length-4 patterns that fall outside the polynomial classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Length4 {
    Uuur,
    Uuru,
    Uruu,
    Ruuu,
}

impl Length4 {
    pub const ALL: [Length4; 4] = [Length4::Uuur, Length4::Uuru, Length4::Uruu, Length4::Ruuu];

    pub fn as_str(self) -> &'static str {
        match self {
            Length4::Uuur => "uuur",
            Length4::Uuru => "uuru",
            Length4::Uruu => "uruu",
            Length4::Ruuu => "ruuu",
        }
    }

    fn of(p: &Pattern) -> Option<Length4> {
        Length4::ALL.into_iter().find(|w| p.is_text(w.as_str()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternClass {
    /// `r^a`.
    PureRight(usize),
    /// `u^c`.
    PureUp(usize),
    BifixFreeDepth0,
    BifixIndex1Depth0,
    DepthPositive {
        depth: usize,
        bifix_index: usize,
    },
    Length4Special(Length4),
    Unsupported(String),
}

impl PatternClass {
    /// Short machine-friendly name, e.g. `"BifixIndex1Depth0"`.
    pub fn name(&self) -> &'static str {
        match self {
            PatternClass::PureRight(_) => "PureRight",
            PatternClass::PureUp(_) => "PureUp",
            PatternClass::BifixFreeDepth0 => "BifixFreeDepth0",
            PatternClass::BifixIndex1Depth0 => "BifixIndex1Depth0",
            PatternClass::DepthPositive { .. } => "DepthPositive",
            PatternClass::Length4Special(_) => "Length4Special",
            PatternClass::Unsupported(_) => "Unsupported",
        }
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternClass::PureRight(a) => write!(f, "PureRight(a={a})"),
            PatternClass::PureUp(c) => write!(f, "PureUp(c={c})"),
            PatternClass::BifixFreeDepth0 => write!(f, "BifixFreeDepth0"),
            PatternClass::BifixIndex1Depth0 => write!(f, "BifixIndex1Depth0"),
            PatternClass::DepthPositive { depth, bifix_index } => {
                write!(f, "DepthPositive(depth={depth}, bifix_index={bifix_index})")
            }
            PatternClass::Length4Special(w) => write!(f, "Length4Special({})", w.as_str()),
            PatternClass::Unsupported(reason) => write!(f, "Unsupported({reason})"),
        }
    }
}

/// Everything the counting methods need to know about a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternProfile {
    pub pattern: Pattern,
    /// Number of `r` steps.
    pub a: usize,
    /// Number of `u` steps.
    pub c: usize,
    pub depth: usize,
    pub bifixes: Vec<Pattern>,
    pub bifix_index: usize,
    /// Dimensions of `op'` (equivalently `p'o`) when `p = op'o` has a single
    /// bifix `o`.
    pub b: Option<usize>,
    pub d: Option<usize>,
    pub reverse: Pattern,
    pub class: PatternClass,
}

impl PatternProfile {
    pub fn new(pattern: &Pattern) -> PatternProfile {
        let (a, c) = pattern.dimensions();
        let depth = pattern.depth();
        let bifixes = pattern.bifixes();
        let bifix_index = bifixes.len();
        let (b, d) = match bifixes.as_slice() {
            [o] => {
                let (oa, oc) = o.dimensions();
                (Some(a - oa), Some(c - oc))
            }
            _ => (None, None),
        };
        let mut profile = PatternProfile {
            pattern: pattern.clone(),
            a,
            c,
            depth,
            bifixes,
            bifix_index,
            b,
            d,
            reverse: pattern.reverse(),
            class: PatternClass::Unsupported(String::new()),
        };
        profile.class = profile.assign_class();
        profile
    }

    /// The single bifix `o`, when the bifix index is 1.
    pub fn bifix(&self) -> Option<&Pattern> {
        match self.bifixes.as_slice() {
            [o] => Some(o),
            _ => None,
        }
    }

    /// Depth of `p'o`, where `p = op'o`.
    pub fn depth_tail(&self) -> Option<usize> {
        self.bifix()
            .map(|o| depth_of(&self.pattern.steps()[o.len()..]))
    }

    /// Depth of `op'`, where `p = op'o`.
    pub fn depth_head(&self) -> Option<usize> {
        self.bifix().map(|o| {
            let steps = self.pattern.steps();
            depth_of(&steps[..steps.len() - o.len()])
        })
    }

    fn assign_class(&self) -> PatternClass {
        let (a, c) = (self.a, self.c);
        if c == 0 {
            return PatternClass::PureRight(a);
        }
        if a == 0 {
            return PatternClass::PureUp(c);
        }
        if let Some(w) = Length4::of(&self.pattern) {
            return PatternClass::Length4Special(w);
        }
        if self.bifix_index >= 2 {
            return PatternClass::Unsupported(format!(
                "bifix index {} with mixed steps",
                self.bifix_index
            ));
        }
        if a < c {
            return PatternClass::Unsupported(format!("a = {a} < c = {c}"));
        }
        let bd = self.b.zip(self.d);
        if self.depth == 0 {
            match bd {
                None if a >= 2 => PatternClass::BifixFreeDepth0,
                None => PatternClass::Unsupported("bifix-free with a = 1 (the pattern ur)".into()),
                Some((b, d)) => {
                    let tail = self.depth_tail().unwrap_or(0);
                    if b < d {
                        PatternClass::Unsupported(format!("b = {b} < d = {d}"))
                    } else if b == 0 {
                        PatternClass::Unsupported("b = 0".into())
                    } else if tail > a - c {
                        PatternClass::Unsupported(format!(
                            "depth(p'o) = {tail} exceeds a - c = {}",
                            a - c
                        ))
                    } else {
                        PatternClass::BifixIndex1Depth0
                    }
                }
            }
        } else {
            if let Some((b, d)) = bd {
                let head = self.depth_head().unwrap_or(0);
                if b < d {
                    return PatternClass::Unsupported(format!("b = {b} < d = {d}"));
                }
                if head > d + a - c {
                    return PatternClass::Unsupported(format!(
                        "depth(op') = {head} exceeds d + a - c = {}",
                        d + a - c
                    ));
                }
            }
            PatternClass::DepthPositive {
                depth: self.depth,
                bifix_index: self.bifix_index,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        parse_pattern(s).unwrap()
    }

    fn texts(ps: &[Pattern]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn parses_mixed_case_and_trims() {
        assert_eq!(p(" UrR\n").to_string(), "urr");
        assert_eq!(p("r").steps(), &[Step::R]);
        assert_eq!(p("urruurr").dimensions(), (4, 3));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_pattern("   "), Err(Error::EmptyPattern));
        assert_eq!(
            parse_pattern("urx"),
            Err(Error::InvalidStep { ch: 'x', pos: 2 })
        );
        assert!("u r".parse::<Pattern>().is_err());
    }

    #[test]
    fn dimensions_and_depth() {
        assert_eq!(p("uurrurrur").dimensions(), (5, 4));
        assert_eq!(p("rrrr").dimensions(), (4, 0));
        assert_eq!(p("rrruuurrruu").dimensions(), (6, 5));
        assert_eq!(p("uurrurrur").depth(), 0);
        assert_eq!(p("rrruuurrruu").depth(), 2);
        assert_eq!(p("uuuu").depth(), 4);
        assert_eq!(p("rrrr").depth(), 0);
    }

    #[test]
    fn bifix_examples() {
        assert_eq!(texts(&p("uruuru").bifixes()), ["u", "uru"]);
        assert_eq!(texts(&p("urruurr").bifixes()), ["urr"]);
        assert!(p("ur").bifixes().is_empty());
        assert_eq!(p("rrrrr").bifix_index(), 4);
        assert_eq!(p("uuu").bifix_index(), 2);
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("uruuruu").reverse().to_string(), "rrurrur");
        assert_eq!(p("r").reverse().to_string(), "u");
        assert_eq!(p("urruurr").reverse().reverse(), p("urruurr"));
    }

    #[test]
    fn classify_worked_examples() {
        let prof = p("urruurr").classify();
        assert_eq!(prof.class, PatternClass::BifixIndex1Depth0);
        assert_eq!((prof.a, prof.c, prof.b, prof.d), (4, 3, Some(2), Some(2)));

        let prof = p("rrruuurrruu").classify();
        assert_eq!(
            prof.class,
            PatternClass::DepthPositive {
                depth: 2,
                bifix_index: 1
            }
        );
        assert_eq!(texts(&prof.bifixes), ["rrruu"]);
        assert_eq!(prof.b.unwrap() - prof.d.unwrap(), 0);
        assert_eq!(prof.depth_head(), Some(3));

        assert!(matches!(
            p("ur").classify().class,
            PatternClass::Unsupported(_)
        ));
        assert!(matches!(
            p("uruuru").classify().class,
            PatternClass::Unsupported(_)
        ));
    }

    #[test]
    fn classify_precedence() {
        assert_eq!(p("rrrr").classify().class, PatternClass::PureRight(4));
        assert_eq!(p("uuuu").classify().class, PatternClass::PureUp(4));
        for w in Length4::ALL {
            assert_eq!(
                p(w.as_str()).classify().class,
                PatternClass::Length4Special(w)
            );
        }
        assert_eq!(p("urr").classify().class, PatternClass::BifixFreeDepth0);
        assert_eq!(p("rur").classify().class, PatternClass::BifixIndex1Depth0);
        // bifix r gives b = 1 < d = 2
        assert!(matches!(
            p("ruur").classify().class,
            PatternClass::Unsupported(_)
        ));
        assert_eq!(
            p("rruur").classify().class,
            PatternClass::DepthPositive {
                depth: 1,
                bifix_index: 1
            }
        );
    }

    #[test]
    fn failure_function_matches_definition_exhaustively() {
        for len in 1..=6 {
            for bits in 0..(1u32 << len) {
                let steps = (0..len)
                    .map(|i| if bits >> i & 1 == 1 { Step::U } else { Step::R })
                    .collect();
                let pat = Pattern::from_steps(steps).unwrap();
                assert_eq!(pat.bifixes(), pat.bifixes_by_failure(), "{pat}");
            }
        }
    }
}
