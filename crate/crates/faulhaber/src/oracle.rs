//! Independent ground truth and exhaustive cross-method verification.
//!
//! The brute-force oracle works purely on integers and never touches
//! the coefficient machinery, so a bug shared with the polynomial side
//! cannot mask itself. [`run_verification`] sweeps every cross-check in
//! the crate over caller-chosen ranges and reports failures as data.

use std::fmt::Write as _;

use crate::coeffs::{
    coeffs_by_method, coeffs_by_recurrence, odd_from_even, FaulhaberCoeffs, Method,
};
use crate::linsys::{build_delta, determinant, system_determinant, Parity};
use crate::polyforms::{
    center_to_power, center_to_s1, evaluate, derivative, power_basis_bernoulli, reflect,
    s1_to_center, PolyForm,
};
use crate::ratnum::{double_factorial, Integer, Rational};

/// Exact 1^p + 2^p + ... + n^p by direct integer summation.
pub fn brute_force_sum(p: u32, n: u64) -> Integer {
    let mut sum = Integer::from(0);
    for i in 1..=n {
        sum += Integer::from(i).pow(p);
    }
    sum
}

/// One failed comparison: which check, at which degree, at which inner
/// index (n, j, or coefficient slot; -1 marks a constant term).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct VerifyFailure {
    pub check: String,
    pub p: u32,
    pub index: i64,
    pub expected: Rational,
    pub actual: Rational,
}

/// Outcome of a verification sweep. `failures` is empty exactly when
/// every comparison passed.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct VerifyReport {
    pub p_range: (u32, u32),
    pub n_range: (u64, u64),
    pub checks_run: u64,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// Human-readable table: a summary line plus one row per failure.
    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "verification: p in {}..={}, n in {}..={}, {} checks, {} failures",
            self.p_range.0,
            self.p_range.1,
            self.n_range.0,
            self.n_range.1,
            self.checks_run,
            self.failures.len()
        )
        .unwrap();
        if !self.failures.is_empty() {
            writeln!(out, "{:<28} {:>5} {:>6}  expected / actual", "check", "p", "index").unwrap();
            for f in &self.failures {
                writeln!(
                    out,
                    "{:<28} {:>5} {:>6}  {} / {}",
                    f.check, f.p, f.index, f.expected, f.actual
                )
                .unwrap();
            }
        }
        out
    }
}

/// Test-support hook: corrupt one reference coefficient (degree `p`,
/// slot `m`) inside the agreement check, to confirm the sweep actually
/// detects a wrong value.
#[doc(hidden)]
#[derive(Debug, Clone, Copy)]
pub struct Fault {
    pub p: u32,
    pub m: usize,
}

struct Sweep {
    checks_run: u64,
    failures: Vec<VerifyFailure>,
}

impl Sweep {
    fn compare(&mut self, check: &str, p: u32, index: i64, expected: &Rational, actual: &Rational) {
        self.checks_run += 1;
        if expected != actual {
            self.failures.push(VerifyFailure {
                check: check.to_string(),
                p,
                index,
                expected: expected.clone(),
                actual: actual.clone(),
            });
        }
    }

    fn compare_coeffs(&mut self, check: &str, reference: &FaulhaberCoeffs, got: &FaulhaberCoeffs) {
        for (m, (want, have)) in reference.f.iter().zip(&got.f).enumerate() {
            self.compare(check, reference.p, m as i64, want, have);
        }
        if let (Some(want), Some(have)) = (&reference.constant, &got.constant) {
            self.compare(check, reference.p, -1, want, have);
        }
    }
}

/// Run the full property suite: method agreement for p <= p_max,
/// evaluation against the brute-force oracle for n <= n_max, the
/// determinant closed forms for k <= k_max, basis round trips,
/// coefficient-level symmetry, the derivative identity, and the
/// b/c scaling relation. Failures are data, not errors, and the report
/// is assembled in a fixed order regardless of how checks execute.
pub fn run_verification(p_max: u32, n_max: u64, k_max: u32) -> VerifyReport {
    run_verification_with_fault(p_max, n_max, k_max, None)
}

#[doc(hidden)]
pub fn run_verification_with_fault(
    p_max: u32,
    n_max: u64,
    k_max: u32,
    fault: Option<Fault>,
) -> VerifyReport {
    let mut sweep = Sweep { checks_run: 0, failures: Vec::new() };

    for p in 1..=p_max {
        let mut reference = coeffs_by_recurrence(p).expect("p >= 1");
        if let Some(fault) = fault {
            if fault.p == p && fault.m < reference.f.len() {
                reference.f[fault.m] += &Rational::one();
            }
        }

        // Method agreement against the recurrence path.
        for method in [Method::Determinant, Method::Witmer, Method::Explicit] {
            let got = coeffs_by_method(p, method).expect("p >= 1");
            sweep.compare_coeffs(&format!("agreement-{method}"), &reference, &got);
        }
        if p % 2 == 1 && p >= 3 {
            let transferred = odd_from_even(&coeffs_by_recurrence(p - 1).expect("p - 1 >= 2"))
                .expect("even input");
            sweep.compare_coeffs("agreement-derivative", &reference, &transferred);
        }

        let center = PolyForm::Center(coeffs_by_recurrence(p).expect("p >= 1"));
        let power = power_basis_bernoulli(p);
        let s1 = (p >= 2).then(|| center_to_s1(&center).expect("p >= 2"));

        // Evaluation against the integer oracle in every basis.
        for n in 0..=n_max {
            let expected = Rational::from_integer(brute_force_sum(p, n));
            let arg = Rational::from_integer(Integer::from(n));
            sweep.compare("eval-power", p, n as i64, &expected, &evaluate(&power, &arg));
            sweep.compare("eval-center", p, n as i64, &expected, &evaluate(&center, &arg));
            if let Some(s1) = &s1 {
                sweep.compare("eval-s1", p, n as i64, &expected, &evaluate(s1, &arg));
            }
        }

        // Basis round trips: center -> power against the independent
        // Bernoulli-formula generator, center -> s1 -> center exactly.
        let expanded = center_to_power(&center).expect("valid center form");
        for (i, (want, have)) in
            power.coefficients().iter().zip(expanded.coefficients()).enumerate()
        {
            sweep.compare("round-trip-power", p, i as i64 + 1, want, have);
        }
        if let Some(s1) = &s1 {
            let back = s1_to_center(s1).expect("valid s1 form");
            match (&center, &back) {
                (PolyForm::Center(want), PolyForm::Center(have)) => {
                    sweep.compare_coeffs("round-trip-s1", want, have);
                }
                _ => unreachable!("s1_to_center returns a center form"),
            }
        }

        // Coefficient-level reflection symmetry.
        let reflected = reflect(&power).expect("power form");
        let zero = Rational::zero();
        sweep.compare("symmetry", p, 0, &zero, &reflected[0]);
        for (i, a) in power.coefficients().iter().enumerate() {
            let expected = if p % 2 == 1 { a.clone() } else { -a.clone() };
            sweep.compare("symmetry", p, i as i64 + 1, &expected, &reflected[i + 1]);
        }

        // Derivative identity and the b/c scaling relation.
        if p % 2 == 1 && p >= 3 {
            let derived = derivative(&center).expect("odd center form");
            let lower = coeffs_by_recurrence(p - 1).expect("p - 1 >= 2");
            match &derived {
                PolyForm::Center(have) => sweep.compare_coeffs("derivative-identity", &lower, have),
                _ => unreachable!("derivative returns a center form"),
            }

            let k = (p - 1) / 2;
            let b = center_to_s1(&PolyForm::Center(lower)).expect("p - 1 >= 2");
            let c = s1.as_ref().expect("p >= 3");
            for (j, (bj, cj)) in b.coefficients().iter().zip(c.coefficients()).enumerate() {
                let ratio =
                    Rational::from(4 * k + 2) / Rational::from(3 * j as u32 + 6);
                sweep.compare("scaling-relation", p, j as i64, &(ratio * bj), cj);
            }
        }
    }

    // Structured determinant identities.
    for k in 1..=k_max {
        let even = determinant(&build_delta(Parity::Even, k, k).expect("1 <= k"));
        let expected = Rational::from_integer(double_factorial(2 * k as i64 + 1))
            * crate::bernoulli::bernoulli_half(2 * k);
        let expected = if k % 2 == 1 { -expected } else { expected };
        sweep.compare("delta-closed-form-even", 2 * k, k as i64, &expected, &even);

        let odd = determinant(&build_delta(Parity::Odd, k, k).expect("1 <= k"));
        let expected = Rational::from((2 * k + 1) * (k + 1))
            * Rational::from_integer(double_factorial(2 * k as i64))
            * crate::bernoulli::bernoulli_half(2 * k);
        let expected = if k % 2 == 1 { -expected } else { expected };
        sweep.compare("delta-closed-form-odd", 2 * k + 1, k as i64, &expected, &odd);
    }
    for k in 0..=k_max {
        for j in 0..=k {
            let got = system_determinant(Parity::Even, k, j).expect("j <= k");
            let expected = Rational::from_integer(double_factorial(2 * k as i64 + 1))
                / Rational::from_integer(double_factorial(2 * (k as i64 - j as i64) - 1));
            sweep.compare("system-determinant", 2 * k, j as i64, &expected, &got);
        }
    }

    let mut failures = sweep.failures;
    failures.sort_by(|a, b| {
        a.check.cmp(&b.check).then(a.p.cmp(&b.p)).then(a.index.cmp(&b.index))
    });
    VerifyReport {
        p_range: (1, p_max),
        n_range: (0, n_max),
        checks_run: sweep.checks_run,
        failures,
    }
}
