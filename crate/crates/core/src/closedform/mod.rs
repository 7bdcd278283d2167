//! Explicit counting formulas, evaluated exactly.
//!
//! Every sum is accumulated as a [`BigRational`](crate::ExactRational) and
//! the result must reduce to an integer on the formula's domain; anything
//! else is reported as [`Error::NonIntegral`]. A term whose binomial part
//! vanishes is dropped before its rational prefactor is applied, so a zero
//! denominator is only an error when it multiplies a nonzero term.

pub mod binomial;

pub use binomial::{gbinom, geometric_coefficient, multinomial};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pattern::{parse_pattern, PatternClass, PatternProfile};
use crate::{Count, ExactRational};

/// Running sum of `numerator / denominator` terms for one formula.
struct Accumulator {
    formula: &'static str,
    at: String,
    total: ExactRational,
}

impl Accumulator {
    fn new(formula: &'static str, at: String) -> Accumulator {
        Accumulator {
            formula,
            at,
            total: ExactRational::zero(),
        }
    }

    fn add(&mut self, numerator: Count, denominator: i64) -> Result<()> {
        if numerator.is_zero() {
            return Ok(());
        }
        if denominator == 0 {
            return Err(Error::ZeroDenominator {
                formula: self.formula,
                at: self.at.clone(),
            });
        }
        self.total += ExactRational::new(numerator, BigInt::from(denominator));
        Ok(())
    }

    fn add_signed(&mut self, negative: bool, numerator: Count, denominator: i64) -> Result<()> {
        self.add(if negative { -numerator } else { numerator }, denominator)
    }

    fn scaled(mut self, factor: impl Into<BigInt>) -> Accumulator {
        self.total *= ExactRational::from_integer(factor.into());
        self
    }

    fn finish(self) -> Result<Count> {
        if self.total.is_integer() {
            Ok(self.total.to_integer())
        } else {
            Err(Error::NonIntegral {
                formula: self.formula,
                at: self.at,
                value: self.total,
            })
        }
    }
}

fn geo(x: i64, n: i64, a: i64) -> Count {
    geometric_coefficient(x, n, a)
}

fn odd(i: i64) -> bool {
    i % 2 != 0
}

fn require_pure_step(operation: &'static str, what: &str, value: usize) -> Result<i64> {
    if value < 2 {
        return Err(Error::InvalidArgument {
            operation,
            reason: format!("{what} must be at least 2, got {value}"),
        });
    }
    Ok(value as i64)
}

/// Ballot paths to `(n, n)` avoiding `r^a`: `C(n+1, n)_a / (n + 1)`.
pub fn ra_diagonal(a: usize, n: usize) -> Result<Count> {
    let a = require_pure_step("ra_diagonal", "a", a)?;
    let n = n as i64;
    let mut acc = Accumulator::new("ra_diagonal", format!("a={a}, n={n}"));
    acc.add(geo(n + 1, n, a), n + 1)?;
    acc.finish()
}

/// Paths to `(n + l, n)` weakly above `y = x - l` avoiding `r^a`, i.e. the
/// endpoint on the boundary:
///
/// `sum_{k=0}^{l} C(k-l, k)_a C(n+l+1-k, n+l-k)_a / (n + l + 1 - k)`.
pub fn ra_boundary(a: usize, l: usize, n: usize) -> Result<Count> {
    let a = require_pure_step("ra_boundary", "a", a)?;
    let (l, n) = (l as i64, n as i64);
    let mut acc = Accumulator::new("ra_boundary", format!("a={a}, l={l}, n={n}"));
    for k in 0..=l {
        acc.add(
            geo(k - l, k, a) * geo(n + l + 1 - k, n + l - k, a),
            n + l + 1 - k,
        )?;
    }
    acc.finish()
}

/// Ballot paths to `(n, m)`, `m >= n`, avoiding `u^c`; the reversal of
/// [`ra_boundary`]:
///
/// `sum_{k=0}^{m-n} C(k-m+n, k)_c C(m+1-k, m-k)_c / (m + 1 - k)`.
pub fn uc_count(c: usize, n: usize, m: usize) -> Result<Count> {
    if c == 0 || m < n {
        return Err(Error::InvalidArgument {
            operation: "uc_count",
            reason: format!("need c >= 1 and m >= n, got c={c}, n={n}, m={m}"),
        });
    }
    let (c, n, m) = (c as i64, n as i64, m as i64);
    let mut acc = Accumulator::new("uc_count", format!("c={c}, n={n}, m={m}"));
    for k in 0..=m - n {
        acc.add(geo(k - m + n, k, c) * geo(m + 1 - k, m - k, c), m + 1 - k)?;
    }
    acc.finish()
}

fn bifix_free_params(operation: &'static str, profile: &PatternProfile) -> Result<(i64, i64)> {
    if profile.class != PatternClass::BifixFreeDepth0 {
        return Err(Error::WrongClass {
            operation,
            pattern: profile.pattern.to_string(),
            found: profile.class.to_string(),
            expected: "BifixFreeDepth0",
        });
    }
    Ok((profile.a as i64, profile.c as i64))
}

/// Basic polynomial `b_n(x)` for a bifix-free depth-0 pattern:
///
/// `x sum_{i=0}^{⌊n/(a-1)⌋} (-1)^i / (x - ci) C(n-(a-1)i, i) C(x+n-(a+c-1)i-1, n-(a-1)i)`,
/// where the `i = 0` factor `x / x` is 1.
pub fn bifixfree_basic(profile: &PatternProfile, n: usize, x: i64) -> Result<Count> {
    let (a, c) = bifix_free_params("bifixfree_basic", profile)?;
    let n = n as i64;
    let mut acc = Accumulator::new(
        "bifixfree_basic",
        format!("{}, n={n}, x={x}", profile.pattern),
    );
    for i in 0..=n / (a - 1) {
        let top = n - (a - 1) * i;
        let term = gbinom(top, i) * gbinom(x + n - (a + c - 1) * i - 1, top);
        if i == 0 {
            acc.add(term, 1)?;
        } else {
            acc.add_signed(odd(i), term * x, x - c * i)?;
        }
    }
    acc.finish()
}

/// `s_n(x)` for a bifix-free depth-0 pattern; at `x = m >= n` the number of
/// ballot paths to `(n, m)` avoiding it:
///
/// `(x-n+1) sum_{i=0}^{⌊n/(a-1)⌋} (-1)^i / (x-ci+1) C(n-(a-1)i, i) C(x+n-(a+c-1)i, n-(a-1)i)`.
pub fn bifixfree_s(profile: &PatternProfile, n: usize, x: i64) -> Result<Count> {
    let (a, c) = bifix_free_params("bifixfree_s", profile)?;
    if n == 0 {
        return Ok(Count::one());
    }
    let n = n as i64;
    let mut acc = Accumulator::new("bifixfree_s", format!("{}, n={n}, x={x}", profile.pattern));
    for i in 0..=n / (a - 1) {
        let top = n - (a - 1) * i;
        let term = gbinom(top, i) * gbinom(x + n - (a + c - 1) * i, top);
        acc.add_signed(odd(i), term, x - c * i + 1)?;
    }
    acc.scaled(x - n + 1).finish()
}

/// `(a, c, b, d)` for a pattern `p = op'o` with one bifix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct OverlapParams {
    a: i64,
    c: i64,
    b: i64,
    d: i64,
}

impl OverlapParams {
    fn of(profile: &PatternProfile) -> Option<OverlapParams> {
        Some(OverlapParams {
            a: profile.a as i64,
            c: profile.c as i64,
            b: profile.b? as i64,
            d: profile.d? as i64,
        })
    }

    fn for_class(operation: &'static str, profile: &PatternProfile) -> Result<OverlapParams> {
        match (&profile.class, OverlapParams::of(profile)) {
            (PatternClass::BifixIndex1Depth0, Some(params)) => Ok(params),
            _ => Err(Error::WrongClass {
                operation,
                pattern: profile.pattern.to_string(),
                found: profile.class.to_string(),
                expected: "BifixIndex1Depth0",
            }),
        }
    }

    /// `b_n(y) / y` for `n >= 1`, as the triple sum over `j, k, l` with
    /// `N = n - (a-1)j - bk - (b-1)l`:
    ///
    /// `multinomial(N; j, k, l) (-1)^{j+l} / N
    ///  * C(n - (a+c-1)j - (b+d)(k+l) - 1 + y, n - (a-1)j - b(k+l) - 1)`.
    fn basic_over_y(self, formula: &'static str, n: i64, y: i64) -> Result<ExactRational> {
        let OverlapParams { a, c, b, d } = self;
        let mut acc = Accumulator::new(formula, format!("n={n}, y={y}"));
        for j in 0..=(n - 1) / (a - 1) {
            let rest = n - 1 - (a - 1) * j;
            for k in 0..=rest / b {
                for l in 0..=rest / b - k {
                    let big_n = n - (a - 1) * j - b * k - (b - 1) * l;
                    let term = multinomial(big_n, j, k, l)
                        * gbinom(
                            n - (a + c - 1) * j - (b + d) * (k + l) - 1 + y,
                            n - (a - 1) * j - b * (k + l) - 1,
                        );
                    acc.add_signed(odd(j + l), term, big_n)?;
                }
            }
        }
        Ok(acc.total)
    }

    fn basic(self, formula: &'static str, n: i64, y: i64) -> Result<ExactRational> {
        if n == 0 {
            return Ok(ExactRational::one());
        }
        Ok(self.basic_over_y(formula, n, y)? * ExactRational::from_integer(y.into()))
    }

    /// `s_n(x) = (x - n + 1) / (x + 1) b_n(x + 1)`, with the `x + 1` cancelled.
    fn sheffer(self, formula: &'static str, n: i64, x: i64) -> Result<ExactRational> {
        if n == 0 {
            return Ok(ExactRational::one());
        }
        Ok(self.basic_over_y(formula, n, x + 1)? * ExactRational::from_integer((x - n + 1).into()))
    }
}

fn integral(formula: &'static str, at: String, value: ExactRational) -> Result<Count> {
    let mut acc = Accumulator::new(formula, at);
    acc.total = value;
    acc.finish()
}

/// Basic polynomial for a depth-0 pattern with one bifix (the triple sum).
pub fn bifix1_basic(profile: &PatternProfile, n: usize, x: i64) -> Result<Count> {
    let params = OverlapParams::for_class("bifix1_basic", profile)?;
    let value = params.basic("bifix1_basic", n as i64, x)?;
    integral(
        "bifix1_basic",
        format!("{}, n={n}, x={x}", profile.pattern),
        value,
    )
}

/// `s_n(x) = (x-n+1)/(x+1) b_n(x+1)` for a depth-0 pattern with one bifix.
pub fn bifix1_s(profile: &PatternProfile, n: usize, x: i64) -> Result<Count> {
    let params = OverlapParams::for_class("bifix1_s", profile)?;
    let value = params.sheffer("bifix1_s", n as i64, x)?;
    integral(
        "bifix1_s",
        format!("{}, n={n}, x={x}", profile.pattern),
        value,
    )
}

/// Outcome of the shortcut formula for patterns `rp'r` (`a = b + 1`, `c = d`),
/// next to the general triple sum it is checked against.
#[derive(Debug, Clone, PartialEq)]
pub struct RprEvaluation {
    /// The value from [`bifix1_s`]; this is what callers should use.
    pub general: Count,
    /// The shortcut sum, exactly as evaluated.
    pub special: ExactRational,
}

impl RprEvaluation {
    pub fn agrees(&self) -> bool {
        self.special == ExactRational::from_integer(self.general.clone())
    }

    pub fn is_integral(&self) -> bool {
        self.special.is_integer()
    }

    pub fn value(&self) -> &Count {
        &self.general
    }

    pub fn discrepancy(&self) -> Option<String> {
        if self.agrees() {
            None
        } else {
            Some(format!(
                "shortcut sum gives {}, general formula gives {}",
                self.special, self.general
            ))
        }
    }
}

/// Evaluates the `rp'r` shortcut
///
/// `sum_{i=0}^{⌊n/b⌋} (-1)^i / (x-di+1) C(n-(b-1)i-1, i) C(x+n-(d+b+1)i, n-bi)`
///
/// alongside [`bifix1_s`]. The shortcut does not reproduce the path counts
/// (for `rur` it gives 3/2 at `n = x = 2`), so the general value is always
/// the one returned by [`RprEvaluation::value`].
pub fn rpr_special_s(profile: &PatternProfile, n: usize, x: i64) -> Result<RprEvaluation> {
    let params = OverlapParams::for_class("rpr_special_s", profile)?;
    if params.a != params.b + 1 || params.c != params.d {
        return Err(Error::InvalidArgument {
            operation: "rpr_special_s",
            reason: format!(
                "needs a = b + 1 and c = d, got a={}, b={}, c={}, d={}",
                params.a, params.b, params.c, params.d
            ),
        });
    }
    let general = bifix1_s(profile, n, x)?;
    if n == 0 {
        return Ok(RprEvaluation {
            general,
            special: ExactRational::one(),
        });
    }
    let OverlapParams { b, d, .. } = params;
    let n = n as i64;
    let mut acc = Accumulator::new(
        "rpr_special_s",
        format!("{}, n={n}, x={x}", profile.pattern),
    );
    for i in 0..=n / b {
        let term = gbinom(n - (b - 1) * i - 1, i) * gbinom(x + n - (d + b + 1) * i, n - b * i);
        acc.add_signed(odd(i), term, x - d * i + 1)?;
    }
    Ok(RprEvaluation {
        general,
        special: acc.total,
    })
}

/// Ballot paths to `(n, n + m)` avoiding `ruuu`:
///
/// `C(n, n)_3 + C(n, n-m)_3 + 2 sum_{i=1}^{m-1} C(n, n-i)_3` for `m >= 1`,
/// and `D(n, n) = D(n-1, n)` on the diagonal.
pub fn ruuu_count(n: usize, m: usize) -> Count {
    if m == 0 {
        return if n == 0 {
            Count::one()
        } else {
            ruuu_count(n - 1, 1)
        };
    }
    let (n, m) = (n as i64, m as i64);
    let mut total = geo(n, n, 3) + geo(n, n - m, 3);
    for i in 1..m {
        total += geo(n, n - i, 3) * 2;
    }
    total
}

/// Ballot paths to `(n, n + m)` avoiding `uuur`:
///
/// `sum_{i=0}^{m} sum_{k=0}^{i+1} C(k-i-1, k)_3 C(n+i+1-k, n+i-k)_3 / (n + i + 1 - k)`.
pub fn uuur_count(n: usize, m: usize) -> Result<Count> {
    let (n, m) = (n as i64, m as i64);
    let mut acc = Accumulator::new("uuur_count", format!("n={n}, m={m}"));
    for i in 0..=m {
        for k in 0..=i + 1 {
            acc.add(
                geo(k - i - 1, k, 3) * geo(n + i + 1 - k, n + i - k, 3),
                n + i + 1 - k,
            )?;
        }
    }
    acc.finish()
}

/// The printed `uuru`/`uruu` double sum, with its free variable taken as the
/// offset `l`:
///
/// `sum_{k=0}^{n} C(l-1, n-k) (-1)^{n-k} sum_{i=0}^{⌊k/2⌋} C(2i-k-1, i) / (k+1-2i)
///  * (l C(2k+l-3i, k-2i-1) + C(2k+l-3i, k-2i))`.
///
/// Matches the path counts for `l >= 1` only; on the diagonal it is one too
/// large for every `n >= 1`. Use [`uuru_count`] for counting.
pub fn uuru_formula(n: usize, l: usize) -> Result<ExactRational> {
    let (n, l) = (n as i64, l as i64);
    let mut acc = Accumulator::new("uuru_formula", format!("n={n}, l={l}"));
    for k in 0..=n {
        let outer = gbinom(l - 1, n - k);
        if outer.is_zero() {
            continue;
        }
        let negative = odd(n - k);
        for i in 0..=k / 2 {
            let top = 2 * k + l - 3 * i;
            let inner = gbinom(2 * i - k - 1, i)
                * (gbinom(top, k - 2 * i - 1) * l + gbinom(top, k - 2 * i));
            acc.add_signed(negative, &outer * inner, k + 1 - 2 * i)?;
        }
    }
    Ok(acc.total)
}

/// Ballot paths to `(n, n + l)` avoiding `uuru` (equivalently `uruu`).
///
/// A ballot path that ends on the diagonal ends with a right step, which
/// cannot complete a pattern ending in `u`, so `D(n, n) = D(n-1, n)`.
pub fn uuru_count(n: usize, l: usize) -> Result<Count> {
    if l == 0 {
        return if n == 0 {
            Ok(Count::one())
        } else {
            uuru_count(n - 1, 1)
        };
    }
    integral("uuru_count", format!("n={n}, l={l}"), uuru_formula(n, l)?)
}

/// The depth-2 pattern with a closed form above its two-region boundary.
pub const DEPTH2_EXAMPLE: &str = "rrruuurrruu";

/// Ballot paths to `(n, n + x)` avoiding `rrruuurrruu`, for `x >= 1`:
///
/// `2^n + sum_{j=1}^{n} sum_{i=0}^{n-j} C(n-j, i) (x+i-1)/(j+x+i-1) b_j(j+x+i-1)`
///
/// with `b_j` the triple-sum basic polynomial for `(a, c, b, d) = (6, 5, 3, 3)`.
pub fn depth2_example_s(n: usize, x: i64) -> Result<Count> {
    if x < 1 {
        return Err(Error::InvalidArgument {
            operation: "depth2_example_s",
            reason: format!("valid for x >= 1 only, got x = {x}"),
        });
    }
    let profile = parse_pattern(DEPTH2_EXAMPLE)
        .expect("constant pattern")
        .classify();
    let params = OverlapParams::of(&profile).expect("single bifix");
    let n = n as i64;
    let mut total = ExactRational::from_integer(BigInt::from(2).pow(n as u32));
    for j in 1..=n {
        for i in 0..=n - j {
            let y = j + x + i - 1;
            // (x+i-1)/y * b_j(y) = (x+i-1) * (b_j(y) / y)
            let weight = gbinom(n - j, i) * (x + i - 1);
            if weight.is_zero() {
                continue;
            }
            total += params.basic_over_y("depth2_example_s", j, y)?
                * ExactRational::from_integer(weight);
        }
    }
    integral("depth2_example_s", format!("n={n}, x={x}"), total)
}
