//! Ground-truth counts for any pattern and any boundary offset.
//!
//! [`count_exhaustive`] walks every step sequence and tests for the factor
//! directly; it shares no code with the automaton and is kept for
//! cross-checking at small sizes. [`count_dp`] and [`dp_table`] run a dynamic
//! program over `(x, y, automaton state)` and scale to the table sizes used
//! elsewhere.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pattern::{failure_function, Pattern, Step};
use crate::table::{CountTable, Region};
use crate::Count;

/// Largest `n + m` accepted by [`count_exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// Factor-matching automaton for a single pattern.
///
/// State `s` is the length of the longest suffix of the input read so far
/// that is a prefix of the pattern. State `L` (the pattern length) is the
/// dead state: the pattern has just been completed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternAutomaton {
    len: usize,
    // transitions[s] = [on U, on R] for live states 0..len
    transitions: Vec<[usize; 2]>,
    fail: Vec<usize>,
}

fn step_index(step: Step) -> usize {
    match step {
        Step::U => 0,
        Step::R => 1,
    }
}

/// Builds the automaton for `p`.
pub fn build_automaton(p: &Pattern) -> PatternAutomaton {
    let steps = p.steps();
    let len = steps.len();
    let fail = failure_function(steps);
    let mut transitions = vec![[0usize; 2]; len];
    for s in 0..len {
        for step in [Step::U, Step::R] {
            let next = if steps[s] == step {
                s + 1
            } else if s == 0 {
                0
            } else {
                transitions[fail[s - 1]][step_index(step)]
            };
            transitions[s][step_index(step)] = next;
        }
    }
    PatternAutomaton {
        len,
        transitions,
        fail,
    }
}

impl PatternAutomaton {
    pub fn pattern_len(&self) -> usize {
        self.len
    }

    pub fn dead_state(&self) -> usize {
        self.len
    }

    /// Transition from any state. Leaving the dead state restarts through
    /// the longest border, so repeated (overlapping) matches are seen.
    pub fn next(&self, state: usize, step: Step) -> usize {
        if state == self.len {
            let restart = self.fail[self.len - 1];
            self.transitions[restart][step_index(step)]
        } else {
            self.transitions[state][step_index(step)]
        }
    }

    /// End positions (1-based step counts) at which the pattern completes.
    pub fn match_ends(&self, input: &[Step]) -> Vec<usize> {
        let mut state = 0;
        let mut ends = Vec::new();
        for (i, &step) in input.iter().enumerate() {
            state = self.next(state, step);
            if state == self.len {
                ends.push(i + 1);
            }
        }
        ends
    }

    pub fn contains(&self, input: &[Step]) -> bool {
        !self.match_ends(input).is_empty()
    }
}

/// A counting question: paths from `(0, 0)` to `(n, m)` weakly above
/// `y = x - l` avoiding `pattern`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathQuery {
    pub pattern: Pattern,
    pub n: usize,
    pub m: usize,
    pub l: usize,
}

impl PathQuery {
    pub fn new(pattern: Pattern, n: usize, m: usize, l: usize) -> PathQuery {
        PathQuery { pattern, n, m, l }
    }
}

/// Counts by walking every admissible step sequence.
pub fn count_exhaustive(q: &PathQuery) -> Result<Count> {
    let total = q.n + q.m;
    if total > EXHAUSTIVE_LIMIT {
        return Err(Error::SizeLimit {
            limit: EXHAUSTIVE_LIMIT,
            requested: total,
        });
    }
    if q.m + q.l < q.n {
        return Ok(Count::zero());
    }
    struct Walk<'a> {
        pattern: &'a [Step],
        target: (usize, usize),
        l: i64,
        path: Vec<Step>,
        found: u64,
    }
    impl Walk<'_> {
        fn go(&mut self, x: usize, y: usize) {
            if (x, y) == self.target {
                self.found += 1;
                return;
            }
            for step in [Step::U, Step::R] {
                let (nx, ny) = match step {
                    Step::U => (x, y + 1),
                    Step::R => (x + 1, y),
                };
                if nx > self.target.0 || ny > self.target.1 || (ny as i64) < nx as i64 - self.l {
                    continue;
                }
                self.path.push(step);
                if !self.path.ends_with(self.pattern) {
                    self.go(nx, ny);
                }
                self.path.pop();
            }
        }
    }
    let mut walk = Walk {
        pattern: q.pattern.steps(),
        target: (q.n, q.m),
        l: q.l as i64,
        path: Vec::with_capacity(total),
        found: 0,
    };
    walk.go(0, 0);
    Ok(Count::from(walk.found))
}

/// Counts with the automaton dynamic program.
pub fn count_dp(q: &PathQuery) -> Count {
    dp_table(&q.pattern, q.n, q.m, q.l).get(q.n, q.m).clone()
}

/// All counts for `0 <= n <= n_max`, `0 <= m <= m_max` in one pass.
///
/// Cells below the boundary are forced zeros. The dead state is never
/// entered, so each cell carries one counter per live state.
pub fn dp_table(p: &Pattern, n_max: usize, m_max: usize, l: usize) -> CountTable {
    let automaton = build_automaton(p);
    let live = automaton.pattern_len();
    let width = n_max + 1;
    let mut table = CountTable::new(n_max, m_max, l);
    // rows of per-state counters, rolling over m
    let mut prev: Vec<Vec<Count>> = vec![vec![Count::zero(); live]; width];
    let mut cur: Vec<Vec<Count>> = vec![vec![Count::zero(); live]; width];
    for m in 0..=m_max {
        for n in 0..=n_max {
            let cell = &mut cur[n];
            cell.iter_mut().for_each(|c| c.set_zero());
            if m + l < n {
                continue;
            }
            if n == 0 && m == 0 {
                cell[0] = Count::one();
            }
            if m > 0 {
                for (s, v) in prev[n].iter().enumerate() {
                    if !v.is_zero() {
                        let t = automaton.next(s, Step::U);
                        if t < live {
                            cell[t] += v;
                        }
                    }
                }
            }
            if n > 0 {
                let (left, right) = cur.split_at_mut(n);
                let from = &left[n - 1];
                let cell = &mut right[0];
                for (s, v) in from.iter().enumerate() {
                    if !v.is_zero() {
                        let t = automaton.next(s, Step::R);
                        if t < live {
                            cell[t] += v;
                        }
                    }
                }
            }
            let total: Count = cur[n].iter().sum();
            table.set(n, m, total, Region::PathCount);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    table
}

/// Unrestricted count of paths to `(n, m)` weakly above `y = x - l`, by
/// the plain ballot recurrence.
pub fn ballot_count(n: usize, m: usize, l: usize) -> Count {
    if m + l < n {
        return Count::zero();
    }
    let mut row = vec![Count::zero(); n + 1];
    for y in 0..=m {
        for x in 0..=n {
            if y + l < x {
                row[x].set_zero();
                continue;
            }
            if x == 0 && y == 0 {
                row[0] = Count::one();
            } else if x > 0 {
                let left = row[x - 1].clone();
                row[x] += left;
            }
        }
    }
    row[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    fn p(s: &str) -> Pattern {
        parse_pattern(s).unwrap()
    }

    fn steps(s: &str) -> Vec<Step> {
        p(s).steps().to_vec()
    }

    #[test]
    fn automaton_transitions() {
        let a = build_automaton(&p("rr"));
        assert_eq!(a.next(1, Step::R), 2);
        assert_eq!(a.next(1, Step::U), 0);
        assert_eq!(a.dead_state(), 2);

        let a = build_automaton(&p("uruuru"));
        let mut state = 0;
        for &s in &steps("uru") {
            state = a.next(state, s);
        }
        assert_eq!(a.next(state, Step::U), 4);
        assert_eq!(a.match_ends(&steps("uruuru")), [6]);
        // overlapping occurrences through the border "uru"
        assert_eq!(a.match_ends(&steps("uruuruuru")), [6, 9]);
        // and through the border "u"
        assert_eq!(a.match_ends(&steps("uruururuuru")), [6, 11]);
    }

    #[test]
    fn automaton_progress_bounded() {
        for text in ["uruuru", "rrruuurrruu", "urruurr", "rrrr"] {
            let a = build_automaton(&p(text));
            for s in 0..a.pattern_len() {
                for step in [Step::U, Step::R] {
                    assert!(a.next(s, step) <= s + 1);
                }
            }
        }
    }

    #[test]
    fn exhaustive_examples() {
        let q = |s: &str, n, m, l| PathQuery::new(p(s), n, m, l);
        assert_eq!(count_exhaustive(&q("urruurr", 4, 4, 0)).unwrap(), 13.into());
        assert_eq!(count_exhaustive(&q("ur", 0, 0, 0)).unwrap(), 1.into());
        assert_eq!(count_exhaustive(&q("u", 3, 2, 0)).unwrap(), 0.into());
        assert!(matches!(
            count_exhaustive(&q("u", 13, 12, 0)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn dp_examples() {
        let q = |s: &str, n, m, l| count_dp(&PathQuery::new(p(s), n, m, l));
        assert_eq!(q("rrruuurrruu", 10, 10, 0), 16751.into());
        assert_eq!(q("rrruuurrruu", 8, 8, 0), 1429.into());
        assert_eq!(q("rrrr", 9, 4, 5), 112.into());
        assert_eq!(q("rrrr", 6, 0, 5), 0.into());
    }

    #[test]
    fn ballot_counts() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(ballot_count(n, n, 0), c.into());
        }
        assert_eq!(ballot_count(3, 2, 0), 0.into());
        assert_eq!(ballot_count(2, 0, 2), 1.into());
    }
}
