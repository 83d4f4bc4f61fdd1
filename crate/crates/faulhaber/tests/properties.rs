//! Randomized algebraic invariants for the scalar layer. The
//! higher-level identities are checked exhaustively over fixed ranges
//! in the unit and acceptance suites; randomness only earns its keep
//! here, where the input space is genuinely unbounded.

use proptest::prelude::*;

use faulhaber::{binomial, brute_force_sum, double_factorial, Integer, Rational};

fn rationals() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1..=u32::MAX).prop_map(|(n, d)| {
        let r = Rational::new(n, d as i64).unwrap();
        if n % 3 == 0 {
            -r
        } else {
            r
        }
    })
}

proptest! {
    #[test]
    fn addition_round_trips_exactly(a in rationals(), b in rationals()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn multiplication_round_trips_exactly(a in rationals(), b in rationals()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn wire_format_round_trips(a in rationals()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn pascal_identity(n in 2u64..200, r_seed in 0u64..200) {
        let r = (r_seed % (n - 1)) + 1; // 1 <= r <= n-1
        prop_assert_eq!(
            binomial(n, r as i64),
            binomial(n - 1, r as i64 - 1) + binomial(n - 1, r as i64)
        );
    }

    #[test]
    fn double_factorials_interleave_to_factorial(n in 1i64..=60) {
        let factorial: Integer = (1..=n).map(Integer::from).product();
        prop_assert_eq!(double_factorial(n) * double_factorial(n - 1), factorial);
    }

    #[test]
    fn brute_force_matches_defining_recurrence(p in 0u32..=12, n in 1u64..=60) {
        let step = brute_force_sum(p, n) - brute_force_sum(p, n - 1);
        prop_assert_eq!(step, Integer::from(n).pow(p));
    }
}
