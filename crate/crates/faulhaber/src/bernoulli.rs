//! Bernoulli numbers B_r and the half-argument values B_r(1/2).
//!
//! This crate uses the B_1 = -1/2 convention throughout; the alternate
//! B_1 = +1/2 convention is deliberately not supported, since every
//! coefficient formula downstream is stated for B_1 = -1/2.
//!
//! Numbers are generated by the defining recurrence
//!
//! ```text
//! sum_{r=0}^{m} C(m+1, r) B_r = 0        (m >= 1)
//! ```
//!
//! solved for B_m, at O(m^2) rational operations: adequate at desk
//! scale and free of external tables. Half-argument values come from
//! B_r(1/2) = (2^{1-r} - 1) B_r.

use std::sync::{LazyLock, Mutex};

use crate::ratnum::{binomial, pow2, Rational};

/// Memoized table of B_r and B_r(1/2), filled densely from r = 0 up to
/// the largest index requested. Interior mutability is serialized by a
/// mutex, so concurrent readers observe a consistent table; returned
/// values are owned and immutable.
pub struct BernoulliCache {
    tables: Mutex<Tables>,
}

struct Tables {
    /// b[r] = B_r
    b: Vec<Rational>,
    /// half[r] = B_r(1/2)
    half: Vec<Rational>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            tables: Mutex::new(Tables { b: Vec::new(), half: Vec::new() }),
        }
    }

    /// Exact B_r under the B_1 = -1/2 convention.
    pub fn number(&self, r: u32) -> Rational {
        let mut tables = self.tables.lock().unwrap();
        tables.grow_to(r);
        tables.b[r as usize].clone()
    }

    /// Exact B_r(1/2) = (2^{1-r} - 1) B_r.
    pub fn half(&self, r: u32) -> Rational {
        let mut tables = self.tables.lock().unwrap();
        tables.grow_to(r);
        tables.half[r as usize].clone()
    }

    /// Largest index currently cached, if any. Growth is monotone:
    /// querying a larger index never changes previously cached values.
    pub fn len(&self) -> usize {
        self.tables.lock().unwrap().b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl Tables {
    fn grow_to(&mut self, r: u32) {
        let want = r as usize + 1;
        if self.b.is_empty() {
            self.b.push(Rational::one());
            self.half.push(Rational::one());
        }
        for m in self.b.len()..want {
            // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
            let sum: Rational = (0..m)
                .map(|j| Rational::from_integer(binomial(m as u64 + 1, j as i64)) * &self.b[j])
                .sum();
            let b_m = -sum / Rational::from(m as u32 + 1);
            let half_m = (pow2(1 - m as i64) - Rational::one()) * &b_m;
            self.b.push(b_m);
            self.half.push(half_m);
        }
    }
}

static SHARED: LazyLock<BernoulliCache> = LazyLock::new(BernoulliCache::new);

/// The process-wide shared cache used by the convenience functions.
pub fn shared_cache() -> &'static BernoulliCache {
    &SHARED
}

/// B_r from the process-wide shared cache.
pub fn bernoulli_number(r: u32) -> Rational {
    SHARED.number(r)
}

/// B_r(1/2) from the process-wide shared cache.
pub fn bernoulli_half(r: u32) -> Rational {
    SHARED.half(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratnum::Integer;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), Rational::one());
        assert_eq!(bernoulli_number(1), r(-1, 2));
        assert_eq!(bernoulli_number(2), r(1, 6));
        assert_eq!(bernoulli_number(3), Rational::zero());
        assert_eq!(bernoulli_number(4), r(-1, 30));
        assert_eq!(bernoulli_number(10), r(5, 66));
        assert_eq!(bernoulli_number(12), r(-691, 2730));
    }

    #[test]
    fn half_argument_values() {
        assert_eq!(bernoulli_half(0), Rational::one());
        assert_eq!(bernoulli_half(2), r(-1, 12));
        // B_10(1/2) = (2^-9 - 1) * 5/66, the constant coefficient of the
        // S_10 center form.
        assert_eq!(bernoulli_half(10), r(-2555, 33792));
    }

    #[test]
    fn odd_indices_vanish_from_three_up() {
        let cache = BernoulliCache::new();
        for r in (3..=41).step_by(2) {
            assert!(cache.number(r).is_zero(), "B_{r} should be zero");
            assert!(cache.half(r).is_zero(), "B_{r}(1/2) should be zero");
        }
    }

    #[test]
    fn recurrence_closure_holds() {
        // sum_{r=0}^{m} C(m+1, r) B_r = 0 for every m >= 1 under the
        // B_1 = -1/2 convention.
        let cache = BernoulliCache::new();
        for m in 1u64..=40 {
            let sum: Rational = (0..=m)
                .map(|j| {
                    Rational::from_integer(binomial(m + 1, j as i64)) * cache.number(j as u32)
                })
                .sum();
            assert!(sum.is_zero(), "closure failed at m = {m}: {sum}");
        }
    }

    #[test]
    fn half_table_is_consistent_with_table() {
        let cache = BernoulliCache::new();
        for r in 0..=30u32 {
            let expected = (pow2(1 - r as i64) - Rational::one()) * cache.number(r);
            assert_eq!(cache.half(r), expected);
        }
    }

    #[test]
    fn growth_is_monotone() {
        let cache = BernoulliCache::new();
        let before: Vec<Rational> = (0..=8).map(|r| cache.number(r)).collect();
        assert_eq!(cache.len(), 9);
        cache.number(40);
        let after: Vec<Rational> = (0..=8).map(|r| cache.number(r)).collect();
        assert_eq!(before, after);
        assert_eq!(cache.len(), 41);
    }

    #[test]
    fn denominators_match_von_staudt_clausen() {
        // The denominator of B_2k is the product of primes p with
        // (p - 1) | 2k. Spot-check a couple of values.
        assert_eq!(bernoulli_number(6), Rational::new(1, 42).unwrap());
        assert_eq!(bernoulli_number(8).denom(), &Integer::from(30));
    }
}
