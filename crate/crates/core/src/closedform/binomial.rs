use num_traits::{One, Zero};

use crate::Count;

/// `C(x, k) = x (x-1) ... (x-k+1) / k!` for any integer `x`; zero for `k < 0`.
pub fn gbinom(x: i64, k: i64) -> Count {
    if k < 0 {
        return Count::zero();
    }
    if x >= 0 && x < k {
        return Count::zero();
    }
    // C(x, i+1) = C(x, i) (x - i) / (i + 1), exact at every step
    let mut acc = Count::one();
    for i in 0..k {
        acc *= x - i;
        acc /= i + 1;
    }
    acc
}

/// `[t^n] (1 + t + ... + t^{a-1})^x`, via
/// `sum_{i=0}^{⌊n/a⌋} (-1)^i C(x, i) C(x + n - ai - 1, n - ai)`.
///
/// Valid for negative `x` as well (the series is then infinite). Zero for
/// `n < 0`. For `a = 2` this is `C(x, n)`.
pub fn geometric_coefficient(x: i64, n: i64, a: i64) -> Count {
    assert!(a >= 1, "geometric coefficient needs a >= 1");
    if n < 0 {
        return Count::zero();
    }
    let mut total = Count::zero();
    for i in 0..=n / a {
        let term = gbinom(x, i) * gbinom(x + n - a * i - 1, n - a * i);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `N! / (j! k! l! (N-j-k-l)!)`, zero when any part is negative.
pub fn multinomial(total: i64, j: i64, k: i64, l: i64) -> Count {
    let rest = total - j - k - l;
    if total < 0 || j < 0 || k < 0 || l < 0 || rest < 0 {
        return Count::zero();
    }
    gbinom(total, j) * gbinom(total - j, k) * gbinom(total - j - k, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gbinom_values() {
        assert_eq!(gbinom(5, 2), 10.into());
        assert_eq!(gbinom(-1, 3), (-1).into());
        assert_eq!(gbinom(3, 5), 0.into());
        assert_eq!(gbinom(7, 0), 1.into());
        assert_eq!(gbinom(-4, 0), 1.into());
        assert_eq!(gbinom(4, -1), 0.into());
        // C(-3, 2) = (-3)(-4)/2
        assert_eq!(gbinom(-3, 2), 6.into());
        for k in 0..10 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(gbinom(-1, k), sign.into());
        }
    }

    #[test]
    fn geometric_values() {
        // (1 + t + t^2)^2 = 1 + 2t + 3t^2 + 2t^3 + t^4
        let coeffs: Vec<Count> = (0..=5).map(|n| geometric_coefficient(2, n, 3)).collect();
        assert_eq!(coeffs, [1, 2, 3, 2, 1, 0].map(Count::from));
        for a in 1..6 {
            for x in -3..6 {
                assert_eq!(geometric_coefficient(x, 0, a), 1.into());
            }
        }
        for x in 0..=12 {
            for n in 0..=12 {
                assert_eq!(geometric_coefficient(x, n, 2), gbinom(x, n));
            }
        }
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(4, 1, 1, 1), 24.into());
        assert_eq!(multinomial(5, 2, 1, 0), 30.into());
        assert_eq!(multinomial(3, 2, 2, 0), 0.into());
        assert_eq!(multinomial(0, 0, 0, 0), 1.into());
    }
}
