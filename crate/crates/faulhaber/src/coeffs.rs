//! Center-form coefficient vectors by several independent methods.
//!
//! Each method is exposed as its own entry point so the paths can be
//! cross-validated against one another; nothing falls back silently.
//!
//! * [`coeffs_by_recurrence`] builds the triangular system and solves it.
//! * [`coeffs_by_determinant`] evaluates each coefficient from its own
//!   structured determinant via Cramer's rule.
//! * [`coeffs_by_witmer`] runs Witmer's vertical recursion over all
//!   lower degrees of the same parity.
//! * [`coeffs_by_explicit`] reads coefficients off the Bernoulli
//!   half-argument values directly.
//! * [`odd_from_even`] transfers an even vector to the next odd degree
//!   through the derivative identity.

use crate::bernoulli::{self, BernoulliCache};
use crate::error::Error;
use crate::linsys::{build_delta, build_system, determinant, solve_triangular, Parity};
use crate::ratnum::{binomial, double_factorial, pow4, Rational};

/// The coefficient vector of one power-sum degree in the center basis
/// N = n + 1/2: for p = 2k the odd powers N, N^3, .., N^{2k+1}; for
/// p = 2k+1 the even powers N^2, .., N^{2k+2} plus a constant term.
///
/// `f` is stored in ascending index order (`f[m]` multiplies N^{2m+1}
/// or N^{2m+2}); presentation layers may reverse it for display.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FaulhaberCoeffs {
    pub p: u32,
    pub k: u32,
    pub parity: Parity,
    pub f: Vec<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant: Option<Rational>,
}

impl FaulhaberCoeffs {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coefficient serialization cannot fail")
    }
}

/// Selector for the independently testable coefficient paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Recurrence,
    Determinant,
    Witmer,
    Explicit,
}

impl Method {
    pub const ALL: [Method; 4] =
        [Method::Recurrence, Method::Determinant, Method::Witmer, Method::Explicit];

    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Determinant => "determinant",
            Method::Witmer => "witmer",
            Method::Explicit => "explicit",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "recurrence" => Ok(Method::Recurrence),
            "determinant" => Ok(Method::Determinant),
            "witmer" => Ok(Method::Witmer),
            "explicit" => Ok(Method::Explicit),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// Split p >= 1 into its parity and k; S_0 has no center form.
pub fn decompose(p: u32) -> Result<(Parity, u32), Error> {
    if p == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let parity = Parity::of(p);
    let k = match parity {
        Parity::Even => p / 2,
        Parity::Odd => (p - 1) / 2,
    };
    Ok((parity, k))
}

/// The constant term of an odd-degree center form, forced by
/// S_{2k+1}(0) = 0: c = -sum_m f[m] / 4^{m+1}.
pub fn constant_term(f: &[Rational]) -> Rational {
    -f.iter()
        .enumerate()
        .map(|(m, fm)| fm * &pow4(-(m as i64 + 1)))
        .sum::<Rational>()
}

fn assemble(p: u32, parity: Parity, k: u32, f: Vec<Rational>) -> FaulhaberCoeffs {
    let constant = match parity {
        Parity::Even => None,
        Parity::Odd => Some(constant_term(&f)),
    };
    FaulhaberCoeffs { p, k, parity, f, constant }
}

/// Coefficients from the triangular system, solved by back-substitution.
pub fn coeffs_by_recurrence(p: u32) -> Result<FaulhaberCoeffs, Error> {
    let (parity, k) = decompose(p)?;
    let f = solve_triangular(&build_system(parity, k))?;
    Ok(assemble(p, parity, k, f))
}

/// Coefficients via Cramer's rule: f[k-j] is a double-factorial ratio
/// times the order-j determinant, each j evaluated independently.
pub fn coeffs_by_determinant(p: u32) -> Result<FaulhaberCoeffs, Error> {
    let (parity, k) = decompose(p)?;
    let mut f = vec![Rational::zero(); k as usize + 1];
    for j in 0..=k {
        let delta = if j == 0 {
            Rational::one()
        } else {
            determinant(&build_delta(parity, k, j)?)
        };
        let ratio = match parity {
            Parity::Even => {
                Rational::from_integer(double_factorial(2 * (k as i64 - j as i64) - 1))
                    / Rational::from_integer(double_factorial(2 * k as i64 + 1))
            }
            Parity::Odd => {
                Rational::from_integer(double_factorial(2 * (k as i64 - j as i64)))
                    / Rational::from_integer(double_factorial(2 * k as i64 + 2))
            }
        };
        let value = ratio * delta;
        f[(k - j) as usize] = if j % 2 == 0 { value } else { -value };
    }
    Ok(assemble(p, parity, k, f))
}

/// Coefficients by Witmer's vertical recursion, which builds every
/// lower degree of the same parity on the way up. References to a
/// coefficient index that does not exist at a lower degree are taken
/// as zero, so the inner sums start at the first degree that has one.
/// For odd parity the constant comes from Witmer's own recursion over
/// c_1, c_3, .., not from the generic constant formula.
pub fn coeffs_by_witmer(p: u32) -> Result<FaulhaberCoeffs, Error> {
    let (parity, k) = decompose(p)?;
    match parity {
        Parity::Even => {
            // table[d] holds the vector for degree 2d, d = 1..=k.
            let mut table: Vec<Vec<Rational>> = vec![Vec::new()];
            for d in 1..=k as usize {
                let head = Rational::from(2 * d as u32 + 1);
                let mut f = vec![Rational::zero(); d + 1];
                f[d] = Rational::one() / &head;
                for i in (1..d).rev() {
                    let sum: Rational = (i..d)
                        .map(|j| {
                            pow4(j as i64 - d as i64)
                                * Rational::from_integer(binomial(2 * d as u64 + 1, 2 * j as i64))
                                * &table[j][i]
                        })
                        .sum();
                    f[i] = -sum / &head;
                }
                if d >= 1 {
                    let sum: Rational = (1..d)
                        .map(|j| {
                            pow4(j as i64 - d as i64)
                                * Rational::from_integer(binomial(2 * d as u64 + 1, 2 * j as i64))
                                * &table[j][0]
                        })
                        .sum();
                    f[0] = -(pow4(-(d as i64)) + sum) / &head;
                }
                table.push(f);
            }
            let f = table.pop().expect("degree k was just pushed");
            Ok(assemble(p, parity, k, f))
        }
        Parity::Odd => {
            // table[d] holds the vector for degree 2d+1, d = 0..=k.
            let mut table: Vec<Vec<Rational>> = Vec::new();
            let mut constants: Vec<Rational> = Vec::new();
            for d in 0..=k as usize {
                let head = Rational::from(2 * d as u32 + 2);
                let mut f = vec![Rational::zero(); d + 1];
                f[d] = Rational::one() / &head;
                for i in (0..d).rev() {
                    let sum: Rational = (i..d)
                        .map(|j| {
                            pow4(j as i64 - d as i64)
                                * Rational::from_integer(binomial(
                                    2 * d as u64 + 2,
                                    2 * j as i64 + 1,
                                ))
                                * &table[j][i]
                        })
                        .sum();
                    f[i] = -sum / &head;
                }
                let c_sum: Rational = (0..d)
                    .map(|j| {
                        pow4(j as i64 - d as i64)
                            * Rational::from_integer(binomial(2 * d as u64 + 2, 2 * j as i64 + 1))
                            * &constants[j]
                    })
                    .sum();
                constants.push(-(pow4(-(d as i64 + 1)) + c_sum) / &head);
                table.push(f);
            }
            let f = table.pop().expect("degree k was just pushed");
            let constant = constants.pop().expect("constant for degree k was just pushed");
            Ok(FaulhaberCoeffs { p, k, parity, f, constant: Some(constant) })
        }
    }
}

/// Coefficients straight from the Bernoulli half-argument values, using
/// the supplied cache.
pub fn coeffs_by_explicit_with(cache: &BernoulliCache, p: u32) -> Result<FaulhaberCoeffs, Error> {
    let (parity, k) = decompose(p)?;
    let f = (0..=k as u64)
        .map(|m| {
            let half = cache.half(2 * (k as u64 - m) as u32);
            match parity {
                Parity::Even => {
                    Rational::from_integer(binomial(2 * k as u64, 2 * m as i64)) * half
                        / Rational::from(2 * m as u32 + 1)
                }
                Parity::Odd => {
                    Rational::from_integer(binomial(2 * k as u64 + 1, 2 * m as i64 + 1)) * half
                        / Rational::from(2 * m as u32 + 2)
                }
            }
        })
        .collect();
    Ok(assemble(p, parity, k, f))
}

/// Coefficients from the explicit Bernoulli formulas, using the shared
/// process-wide cache.
pub fn coeffs_by_explicit(p: u32) -> Result<FaulhaberCoeffs, Error> {
    coeffs_by_explicit_with(bernoulli::shared_cache(), p)
}

/// Transfer an even-degree vector to degree 2k+1: the derivative
/// identity scales each entry by (2k+1)/(2m+2); the constant then
/// follows from the vanishing of S_{2k+1} at zero.
pub fn odd_from_even(even: &FaulhaberCoeffs) -> Result<FaulhaberCoeffs, Error> {
    if even.parity != Parity::Even {
        return Err(Error::ParityMismatch { expected: Parity::Even, got: even.parity });
    }
    let k = even.k;
    let f: Vec<Rational> = even
        .f
        .iter()
        .enumerate()
        .map(|(m, fm)| fm * &(Rational::from(2 * k + 1) / Rational::from(2 * m as u32 + 2)))
        .collect();
    Ok(assemble(2 * k + 1, Parity::Odd, k, f))
}

/// Dispatch on [`Method`]; every path returns identical coefficients.
pub fn coeffs_by_method(p: u32, method: Method) -> Result<FaulhaberCoeffs, Error> {
    match method {
        Method::Recurrence => coeffs_by_recurrence(p),
        Method::Determinant => coeffs_by_determinant(p),
        Method::Witmer => coeffs_by_witmer(p),
        Method::Explicit => coeffs_by_explicit(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn golden_f10() -> Vec<Rational> {
        vec![r(-2555, 33792), r(127, 256), r(-31, 32), r(7, 8), r(-5, 12), r(1, 11)]
    }

    fn golden_f11() -> Vec<Rational> {
        vec![r(-2555, 6144), r(1397, 1024), r(-341, 192), r(77, 64), r(-11, 24), r(1, 12)]
    }

    #[test]
    fn recurrence_examples() {
        let c = coeffs_by_recurrence(10).unwrap();
        assert_eq!(c.f, golden_f10());
        assert_eq!(c.constant, None);
        assert_eq!((c.parity, c.k), (Parity::Even, 5));

        let c = coeffs_by_recurrence(1).unwrap();
        assert_eq!(c.f, vec![r(1, 2)]);
        assert_eq!(c.constant, Some(r(-1, 8)));

        let c = coeffs_by_recurrence(2).unwrap();
        assert_eq!(c.f, vec![r(-1, 12), r(1, 3)]);
    }

    #[test]
    fn degree_zero_is_rejected_everywhere() {
        for method in Method::ALL {
            assert_eq!(coeffs_by_method(0, method), Err(Error::UnsupportedDegree(0)));
        }
    }

    #[test]
    fn determinant_examples() {
        let c = coeffs_by_determinant(10).unwrap();
        assert_eq!(c.f[5], r(1, 11));
        assert_eq!(c.f[4], r(-5, 12));
        assert_eq!(c.f, golden_f10());

        let c = coeffs_by_determinant(11).unwrap();
        assert_eq!(c.f, golden_f11());
        assert_eq!(c.constant, Some(r(691, 16384)));
    }

    #[test]
    fn witmer_examples() {
        let c = coeffs_by_witmer(2).unwrap();
        assert_eq!(c.f, vec![r(-1, 12), r(1, 3)]);

        let c = coeffs_by_witmer(3).unwrap();
        assert_eq!(c.f, vec![r(-1, 8), r(1, 4)]);
        assert_eq!(c.constant, Some(r(1, 64)));

        assert_eq!(coeffs_by_witmer(10).unwrap(), coeffs_by_recurrence(10).unwrap());
    }

    #[test]
    fn witmer_constant_recursion_matches_generic_formula() {
        for p in (1..=31u32).step_by(2) {
            let witmer = coeffs_by_witmer(p).unwrap();
            assert_eq!(witmer.constant, Some(constant_term(&witmer.f)), "p = {p}");
        }
    }

    #[test]
    fn explicit_examples() {
        let c = coeffs_by_explicit(10).unwrap();
        assert_eq!(c.f[0], r(-2555, 33792));

        let c = coeffs_by_explicit(11).unwrap();
        assert_eq!(c.f[0], r(-2555, 6144));

        let c = coeffs_by_explicit(2).unwrap();
        assert_eq!(c.f[1], r(1, 3));
    }

    #[test]
    fn odd_from_even_examples() {
        let odd = odd_from_even(&coeffs_by_recurrence(10).unwrap()).unwrap();
        assert_eq!(odd.p, 11);
        assert_eq!(odd.f, golden_f11());
        assert_eq!(odd.constant, Some(r(691, 16384)));

        let odd = odd_from_even(&coeffs_by_recurrence(2).unwrap()).unwrap();
        assert_eq!(odd.f, vec![r(-1, 8), r(1, 4)]);
        assert_eq!(odd.constant, Some(r(1, 64)));
        assert_eq!(odd, coeffs_by_witmer(3).unwrap());

        let err = odd_from_even(&coeffs_by_recurrence(3).unwrap());
        assert_eq!(
            err,
            Err(Error::ParityMismatch { expected: Parity::Even, got: Parity::Odd })
        );
    }

    #[test]
    fn leading_coefficient_law() {
        for p in 1..=40u32 {
            let c = coeffs_by_recurrence(p).unwrap();
            assert_eq!(c.f[c.k as usize], Rational::one() / Rational::from(p + 1), "p = {p}");
        }
    }

    #[test]
    fn constant_term_examples() {
        assert_eq!(constant_term(&golden_f11()), r(691, 16384));
        assert_eq!(constant_term(&[r(1, 2)]), r(-1, 8));
        assert_eq!(constant_term(&[r(-1, 8), r(1, 4)]), r(1, 64));
    }

    #[test]
    fn methods_agree_on_small_degrees() {
        for p in 1..=24u32 {
            let reference = coeffs_by_recurrence(p).unwrap();
            for method in Method::ALL {
                assert_eq!(coeffs_by_method(p, method).unwrap(), reference, "p = {p}, {method}");
            }
            if p % 2 == 1 && p >= 3 {
                let transferred = odd_from_even(&coeffs_by_recurrence(p - 1).unwrap()).unwrap();
                assert_eq!(transferred, reference, "odd transfer at p = {p}");
            }
        }
    }

    #[test]
    fn all_entries_nonzero() {
        for p in 1..=30u32 {
            let c = coeffs_by_recurrence(p).unwrap();
            assert!(c.f.iter().all(|fm| !fm.is_zero()), "p = {p}");
        }
    }

    #[test]
    fn json_shape_is_stable() {
        let c = coeffs_by_recurrence(3).unwrap();
        assert_eq!(
            c.to_json(),
            r#"{"p":3,"k":1,"parity":"odd","f":["-1/8","1/4"],"constant":"1/64"}"#
        );
        let c = coeffs_by_recurrence(2).unwrap();
        assert_eq!(c.to_json(), r#"{"p":2,"k":1,"parity":"even","f":["-1/12","1/3"]}"#);
    }
}
