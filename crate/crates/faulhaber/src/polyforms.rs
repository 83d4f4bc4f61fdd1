//! S_p(n) as a polynomial in three bases, with exact conversions,
//! evaluation, differentiation, and reflection.
//!
//! * `power`: coefficients of n, n^2, .., n^{p+1} (no constant term).
//! * `center`: the parity-split form in N = n + 1/2 carried by
//!   [`FaulhaberCoeffs`].
//! * `s1`: the bracketed factor of the classical product forms
//!   S_2(n) * [b_0 + b_1 s + ..] (p even) and s^2 * [c_0 + c_1 s + ..]
//!   (p odd, p >= 3), where s = S_1(n) = n(n+1)/2. Only the bracket is
//!   stored; the prefactor is implied by the parity.
//!
//! The bridge between the center and s1 worlds is the algebraic
//! identity (n + 1/2)^2 = (1 + 8 S_1(n)) / 4.

use std::fmt;

use serde::ser::SerializeStruct;

use crate::bernoulli::bernoulli_half;
use crate::coeffs::{coeffs_by_recurrence, decompose, FaulhaberCoeffs};
use crate::error::Error;
use crate::linsys::Parity;
use crate::ratnum::{binomial, pow2, pow4, Rational};

/// The three coefficient bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Power,
    Center,
    S1,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Power => "power",
            Basis::Center => "center",
            Basis::S1 => "s1",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "power" => Ok(Basis::Power),
            "center" => Ok(Basis::Center),
            "s1" => Ok(Basis::S1),
            other => Err(format!("unknown basis {other:?}")),
        }
    }
}

/// One power-sum polynomial in one basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyForm {
    /// `coeffs[j]` multiplies n^{j+1}; there is never a constant term.
    Power { p: u32, coeffs: Vec<Rational> },
    Center(FaulhaberCoeffs),
    /// The bracket vector: b (p even) or c (p odd), ascending powers of
    /// S_1(n), length k.
    S1 { p: u32, coeffs: Vec<Rational> },
}

impl PolyForm {
    pub fn p(&self) -> u32 {
        match self {
            PolyForm::Power { p, .. } | PolyForm::S1 { p, .. } => *p,
            PolyForm::Center(c) => c.p,
        }
    }

    pub fn basis(&self) -> Basis {
        match self {
            PolyForm::Power { .. } => Basis::Power,
            PolyForm::Center(_) => Basis::Center,
            PolyForm::S1 { .. } => Basis::S1,
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        match self {
            PolyForm::Power { coeffs, .. } | PolyForm::S1 { coeffs, .. } => coeffs,
            PolyForm::Center(c) => &c.f,
        }
    }

    /// The constant term, present only for odd-degree center forms.
    pub fn constant(&self) -> Option<&Rational> {
        match self {
            PolyForm::Center(c) => c.constant.as_ref(),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }
}

/// Generate S_p in the requested basis. The center form comes from the
/// triangular-system path; the s1 form is converted from it.
pub fn generate(p: u32, basis: Basis) -> Result<PolyForm, Error> {
    match basis {
        Basis::Power => Ok(power_basis_bernoulli(p)),
        Basis::Center => Ok(PolyForm::Center(coeffs_by_recurrence(p)?)),
        Basis::S1 => center_to_s1(&PolyForm::Center(coeffs_by_recurrence(p)?)),
    }
}

/// The power-basis vector from the Bernoulli formula:
/// a_j = C(p+1, j) (-1)^{p+1-j} B_{p+1-j} / (p+1) for j = 1 .. p+1.
pub fn power_basis_bernoulli(p: u32) -> PolyForm {
    let head = Rational::from(p + 1);
    let coeffs = (1..=p as u64 + 1)
        .map(|j| {
            let b = crate::bernoulli::bernoulli_number((p as u64 + 1 - j) as u32);
            let term = Rational::from_integer(binomial(p as u64 + 1, j as i64)) * b / &head;
            if (p as u64 + 1 - j) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .collect();
    PolyForm::Power { p, coeffs }
}

fn expect_center(pf: &PolyForm) -> Result<&FaulhaberCoeffs, Error> {
    match pf {
        PolyForm::Center(c) => Ok(c),
        other => Err(Error::BasisMismatch { expected: Basis::Center, got: other.basis() }),
    }
}

/// Expand the center form into powers of n by the binomial theorem.
/// The expansion's constant term must vanish (every power sum does at
/// n = 0); a nonzero constant signals corrupted input coefficients.
pub fn center_to_power(pf: &PolyForm) -> Result<PolyForm, Error> {
    let c = expect_center(pf)?;
    let p = c.p as usize;
    // extended[i] multiplies n^i, including the constant slot i = 0.
    let mut extended = vec![Rational::zero(); p + 2];
    for (m, fm) in c.f.iter().enumerate() {
        let e = match c.parity {
            Parity::Even => 2 * m + 1,
            Parity::Odd => 2 * m + 2,
        };
        for (i, slot) in extended.iter_mut().enumerate().take(e + 1) {
            *slot += &(fm * &Rational::from_integer(binomial(e as u64, i as i64))
                * pow2(i as i64 - e as i64));
        }
    }
    if let Some(constant) = &c.constant {
        extended[0] += constant;
    }
    if !extended[0].is_zero() {
        return Err(Error::NonzeroConstant(extended[0].to_string()));
    }
    extended.remove(0);
    Ok(PolyForm::Power { p: c.p, coeffs: extended })
}

/// Convert the center form to the s1 bracket:
///
/// ```text
/// b_j = (3/2) 8^{j+1} sum_{m=j+1}^{k} C(m,   j+1) f_m / 4^m        (p even)
/// c_j =       8^{j+2} sum_{m=j+1}^{k} C(m+1, j+2) f_m / 4^{m+1}    (p odd)
/// ```
///
/// Neither sum touches f_0. No s1 form exists for p < 2.
pub fn center_to_s1(pf: &PolyForm) -> Result<PolyForm, Error> {
    let c = expect_center(pf)?;
    if c.p < 2 {
        return Err(Error::NoS1Form(c.p));
    }
    let k = c.k as usize;
    let coeffs = (0..k)
        .map(|j| {
            let sum: Rational = (j + 1..=k)
                .map(|m| {
                    let (binom, shift) = match c.parity {
                        Parity::Even => (binomial(m as u64, j as i64 + 1), -(m as i64)),
                        Parity::Odd => (binomial(m as u64 + 1, j as i64 + 2), -(m as i64 + 1)),
                    };
                    Rational::from_integer(binom) * &c.f[m] * pow4(shift)
                })
                .sum();
            match c.parity {
                Parity::Even => Rational::new(3, 2).unwrap() * pow2(3 * (j as i64 + 1)) * sum,
                Parity::Odd => pow2(3 * (j as i64 + 2)) * sum,
            }
        })
        .collect();
    Ok(PolyForm::S1 { p: c.p, coeffs })
}

/// Exact inverse of [`center_to_s1`], including the odd constant term,
/// which equals the value of the product form at n = -1/2.
pub fn s1_to_center(pf: &PolyForm) -> Result<PolyForm, Error> {
    let (p, bracket) = match pf {
        PolyForm::S1 { p, coeffs } => (*p, coeffs),
        other => return Err(Error::BasisMismatch { expected: Basis::S1, got: other.basis() }),
    };
    let (parity, k) = decompose(p)?;
    let ku = k as usize;
    // bracket[j-1] carries index j-1; the j = m term references index -1,
    // which is zero by convention.
    let coefficient_at = |j: usize| -> Option<&Rational> {
        if j == 0 {
            None
        } else {
            bracket.get(j - 1)
        }
    };
    let f: Vec<Rational> = (0..=ku)
        .map(|m| {
            let sum: Rational = (m..=ku)
                .filter_map(|j| {
                    let entry = coefficient_at(j)?;
                    let term = match parity {
                        Parity::Even => {
                            Rational::from_integer(binomial(j as u64, m as i64))
                                * entry
                                * pow2(-3 * j as i64)
                        }
                        Parity::Odd => {
                            Rational::from_integer(binomial(j as u64 + 1, m as i64 + 1))
                                * entry
                                * pow2(-3 * (j as i64 + 1))
                        }
                    };
                    let negate = match parity {
                        Parity::Even => j % 2 == 1,
                        Parity::Odd => (j + 1) % 2 == 1,
                    };
                    Some(if negate { -term } else { term })
                })
                .sum();
            let scale = match parity {
                Parity::Even => {
                    let mag = Rational::new(2, 3).unwrap() * pow4(m as i64);
                    if m % 2 == 1 {
                        -mag
                    } else {
                        mag
                    }
                }
                Parity::Odd => {
                    let mag = pow4(m as i64 + 1);
                    if (m + 1) % 2 == 1 {
                        -mag
                    } else {
                        mag
                    }
                }
            };
            scale * sum
        })
        .collect();
    let constant = match parity {
        Parity::Even => None,
        Parity::Odd => {
            let c: Rational = bracket
                .iter()
                .enumerate()
                .map(|(j, cj)| {
                    let term = cj * &pow2(-3 * (j as i64 + 2));
                    if j % 2 == 1 {
                        -term
                    } else {
                        term
                    }
                })
                .sum();
            Some(c)
        }
    };
    Ok(PolyForm::Center(FaulhaberCoeffs { p, k, parity, f, constant }))
}

fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Exact evaluation at any rational n, including negative arguments.
pub fn evaluate(pf: &PolyForm, n: &Rational) -> Rational {
    match pf {
        PolyForm::Power { coeffs, .. } => horner(coeffs, n) * n,
        PolyForm::Center(c) => {
            let center = n + &Rational::new(1, 2).unwrap();
            let center_sq = &center * &center;
            let bracket = horner(&c.f, &center_sq);
            match c.parity {
                Parity::Even => bracket * center,
                Parity::Odd => {
                    bracket * center_sq + c.constant.as_ref().expect("odd form has a constant")
                }
            }
        }
        PolyForm::S1 { p, coeffs } => {
            let half = Rational::new(1, 2).unwrap();
            let s1 = &(n * &(n + &Rational::one())) * &half;
            let bracket = horner(coeffs, &s1);
            match Parity::of(*p) {
                Parity::Even => {
                    // S_2(n) = n (n+1) (2n+1) / 6
                    let s2 = n
                        * &(n + &Rational::one())
                        * (&(n + n) + &Rational::one())
                        / Rational::from(6);
                    s2 * bracket
                }
                Parity::Odd => &s1 * &s1 * bracket,
            }
        }
    }
}

/// The formal derivative of an odd center form divided by 2k+1, which
/// is the even center form one degree down. The constant term of the
/// input never matters.
pub fn derivative(pf: &PolyForm) -> Result<PolyForm, Error> {
    let c = expect_center(pf)?;
    if c.parity != Parity::Odd {
        return Err(Error::ParityMismatch { expected: Parity::Odd, got: c.parity });
    }
    if c.k == 0 {
        // S_1' recovers S_0, which has no center form.
        return Err(Error::UnsupportedDegree(c.p));
    }
    let k = c.k;
    let scale = Rational::from(2 * k + 1);
    let f = c
        .f
        .iter()
        .enumerate()
        .map(|(m, fm)| fm * &Rational::from(2 * m as u32 + 2) / &scale)
        .collect();
    Ok(PolyForm::Center(FaulhaberCoeffs {
        p: 2 * k,
        k,
        parity: Parity::Even,
        f,
        constant: None,
    }))
}

/// Compose a power form with n -> -(n+1) and return the raw coefficient
/// vector of the composition, indexed from the constant slot upward.
/// For a genuine power sum this equals (-1)^{p+1} times the original
/// coefficients with a zero constant.
pub fn reflect(pf: &PolyForm) -> Result<Vec<Rational>, Error> {
    let coeffs = match pf {
        PolyForm::Power { coeffs, .. } => coeffs,
        other => return Err(Error::BasisMismatch { expected: Basis::Power, got: other.basis() }),
    };
    let top = coeffs.len(); // p + 1
    let mut reflected = vec![Rational::zero(); top + 1];
    for (idx, a) in coeffs.iter().enumerate() {
        let j = idx + 1;
        // a_j (-(n+1))^j = a_j (-1)^j sum_i C(j, i) n^i
        for (i, slot) in reflected.iter_mut().enumerate().take(j + 1) {
            let term = a * &Rational::from_integer(binomial(j as u64, i as i64));
            if j % 2 == 1 {
                *slot -= &term;
            } else {
                *slot += &term;
            }
        }
    }
    Ok(reflected)
}

/// The center form straight from the closed Bernoulli-sum formulas, an
/// independent path for the whole polynomial: the even case reads
///
/// ```text
/// S_2k(n) = 1/(2k+1) sum_j C(2k+1, 2j) B_2j(1/2) N^{2k+1-2j}
/// ```
///
/// and the odd case replaces the power by N^{2k+2-2j} - 4^{j-k-1},
/// which folds the constant term into the same sum.
pub fn explicit_center_polynomial(p: u32) -> Result<PolyForm, Error> {
    let (parity, k) = decompose(p)?;
    let head = Rational::from(p + 1);
    let f: Vec<Rational> = (0..=k as u64)
        .map(|m| {
            let j = k as u64 - m;
            let binom = match parity {
                Parity::Even => binomial(2 * k as u64 + 1, 2 * j as i64),
                Parity::Odd => binomial(2 * k as u64 + 2, 2 * j as i64),
            };
            Rational::from_integer(binom) * bernoulli_half(2 * j as u32) / &head
        })
        .collect();
    let constant = match parity {
        Parity::Even => None,
        Parity::Odd => {
            let sum: Rational = (0..=k as u64)
                .map(|j| {
                    Rational::from_integer(binomial(2 * k as u64 + 2, 2 * j as i64))
                        * bernoulli_half(2 * j as u32)
                        * pow4(j as i64 - k as i64 - 1)
                })
                .sum();
            Some(-sum / head)
        }
    };
    Ok(PolyForm::Center(FaulhaberCoeffs { p, k, parity, f, constant }))
}

impl serde::Serialize for PolyForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let has_constant = self.constant().is_some();
        let mut s = serializer.serialize_struct("PolyForm", if has_constant { 4 } else { 3 })?;
        s.serialize_field("p", &self.p())?;
        s.serialize_field("basis", self.basis().name())?;
        s.serialize_field("coefficients", self.coefficients())?;
        if let Some(c) = self.constant() {
            s.serialize_field("constant", c)?;
        }
        s.end()
    }
}

// ---------------------------------------------------------------------------
// Rendering

enum Style {
    Text,
    Latex,
}

fn coefficient_magnitude(r: &Rational, style: &Style) -> String {
    let mag = r.abs();
    match style {
        Style::Text => mag.to_string(),
        Style::Latex => {
            if mag.is_integer() {
                mag.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            }
        }
    }
}

/// Render `terms` (coefficient, variable-part) pairs as a signed sum,
/// skipping zero coefficients and eliding unit coefficients in front of
/// a variable part.
fn render_terms(terms: &[(Rational, String)], style: &Style) -> String {
    let mut out = String::new();
    for (coeff, var) in terms {
        if coeff.is_zero() {
            continue;
        }
        if out.is_empty() {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = coefficient_magnitude(coeff, style);
        if var.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(var);
        } else {
            out.push_str(&mag);
            match style {
                Style::Text => out.push(' '),
                Style::Latex => {}
            }
            out.push_str(var);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn variable_power(var: &str, exp: usize, style: &Style) -> String {
    match (exp, style) {
        (1, _) => var.to_string(),
        (_, Style::Text) => format!("{var}^{exp}"),
        (_, Style::Latex) => format!("{var}^{{{exp}}}"),
    }
}

fn render(pf: &PolyForm, style: Style) -> String {
    let p = pf.p();
    let head = match style {
        Style::Text => format!("S_{p}(n) = "),
        Style::Latex => format!("S_{{{p}}}(n) = "),
    };
    match pf {
        PolyForm::Power { coeffs, .. } => {
            // Descending powers of n.
            let terms: Vec<(Rational, String)> = coeffs
                .iter()
                .enumerate()
                .rev()
                .map(|(idx, a)| (a.clone(), variable_power("n", idx + 1, &style)))
                .collect();
            head + &render_terms(&terms, &style)
        }
        PolyForm::Center(c) => {
            // Descending powers of N = n + 1/2, constant last.
            let mut terms: Vec<(Rational, String)> = c
                .f
                .iter()
                .enumerate()
                .rev()
                .map(|(m, fm)| {
                    let e = match c.parity {
                        Parity::Even => 2 * m + 1,
                        Parity::Odd => 2 * m + 2,
                    };
                    (fm.clone(), variable_power("N", e, &style))
                })
                .collect();
            if let Some(constant) = &c.constant {
                terms.push((constant.clone(), String::new()));
            }
            head + &render_terms(&terms, &style)
        }
        PolyForm::S1 { p, coeffs } => {
            // Ascending powers of S_1(n) inside the bracket.
            let s1_power = |j: usize| -> String {
                match (j, &style) {
                    (0, _) => String::new(),
                    (1, _) => "S_1(n)".to_string(),
                    (_, Style::Text) => format!("S_1(n)^{j}"),
                    (_, Style::Latex) => format!("\\big(S_1(n)\\big)^{{{j}}}"),
                }
            };
            let terms: Vec<(Rational, String)> =
                coeffs.iter().enumerate().map(|(j, c)| (c.clone(), s1_power(j))).collect();
            let bracket = render_terms(&terms, &style);
            let prefactor = match (Parity::of(*p), &style) {
                (Parity::Even, Style::Text) => "S_2(n) ".to_string(),
                (Parity::Even, Style::Latex) => "S_2(n) ".to_string(),
                (Parity::Odd, Style::Text) => "S_1(n)^2 ".to_string(),
                (Parity::Odd, Style::Latex) => "\\big(S_1(n)\\big)^2 ".to_string(),
            };
            match style {
                Style::Text => format!("{head}{prefactor}[{bracket}]"),
                Style::Latex => format!("{head}{prefactor}\\left[ {bracket} \\right]"),
            }
        }
    }
}

impl PolyForm {
    /// Plain-text rendering, descending powers (ascending inside an s1
    /// bracket, matching the classical product presentation).
    pub fn text(&self) -> String {
        render(self, Style::Text)
    }

    /// LaTeX rendering in the same layout as [`PolyForm::text`].
    pub fn latex(&self) -> String {
        render(self, Style::Latex)
    }
}

impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::coeffs_by_witmer;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn center(p: u32) -> PolyForm {
        PolyForm::Center(coeffs_by_recurrence(p).unwrap())
    }

    #[test]
    fn power_basis_small_cases() {
        let s0 = power_basis_bernoulli(0);
        assert_eq!(s0.coefficients(), &[Rational::one()]);

        let s2 = power_basis_bernoulli(2);
        assert_eq!(s2.coefficients(), &[r(1, 6), r(1, 2), r(1, 3)]);

        let s10 = power_basis_bernoulli(10);
        assert_eq!(s10.coefficients()[10], r(1, 11));
        assert_eq!(s10.coefficients()[0], r(5, 66));
    }

    #[test]
    fn power_basis_coefficients_sum_to_one() {
        for p in 0..=30u32 {
            let sum: Rational = power_basis_bernoulli(p).coefficients().iter().cloned().sum();
            assert_eq!(sum, Rational::one(), "S_{p}(1) must be 1");
        }
    }

    #[test]
    fn center_to_power_examples() {
        let s1 = center_to_power(&center(1)).unwrap();
        assert_eq!(s1.coefficients(), &[r(1, 2), r(1, 2)]);

        let s2 = center_to_power(&center(2)).unwrap();
        assert_eq!(s2, power_basis_bernoulli(2));

        let s10 = center_to_power(&center(10)).unwrap();
        assert_eq!(s10, power_basis_bernoulli(10));
    }

    #[test]
    fn center_to_power_detects_corruption() {
        let mut c = coeffs_by_recurrence(10).unwrap();
        c.f[2] += &Rational::one();
        let err = center_to_power(&PolyForm::Center(c));
        assert!(matches!(err, Err(Error::NonzeroConstant(_))));
    }

    #[test]
    fn center_to_s1_golden_vectors() {
        let b = center_to_s1(&center(10)).unwrap();
        assert_eq!(
            b.coefficients(),
            &[r(5, 11), r(-30, 11), r(68, 11), r(-80, 11), r(48, 11)]
        );

        let c = center_to_s1(&center(11)).unwrap();
        assert_eq!(c.coefficients(), &[r(5, 3), r(-20, 3), r(34, 3), r(-32, 3), r(16, 3)]);

        let c3 = center_to_s1(&center(3)).unwrap();
        assert_eq!(c3.coefficients(), &[Rational::one()]);
    }

    #[test]
    fn s1_rejects_low_degrees() {
        assert_eq!(center_to_s1(&center(1)), Err(Error::NoS1Form(1)));
        assert!(generate(0, Basis::S1).is_err());
    }

    #[test]
    fn s1_to_center_inverts() {
        for p in [2u32, 3, 4, 5, 10, 11, 12, 17] {
            let c = center(p);
            let round = s1_to_center(&center_to_s1(&c).unwrap()).unwrap();
            assert_eq!(round, c, "round trip failed at p = {p}");
        }

        let c3 = s1_to_center(&PolyForm::S1 { p: 3, coeffs: vec![Rational::one()] }).unwrap();
        match &c3 {
            PolyForm::Center(fc) => {
                assert_eq!(fc.f, vec![r(-1, 8), r(1, 4)]);
                assert_eq!(fc.constant, Some(r(1, 64)));
            }
            _ => unreachable!(),
        }

        let c11 = s1_to_center(&center_to_s1(&center(11)).unwrap()).unwrap();
        assert_eq!(c11.constant(), Some(&r(691, 16384)));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(&center(10), &Rational::from(3)), Rational::from(60074));
        for p in [1u32, 5, 8] {
            for basis in [Basis::Power, Basis::Center, Basis::S1] {
                if basis == Basis::S1 && p < 2 {
                    continue;
                }
                let pf = generate(p, basis).unwrap();
                assert_eq!(evaluate(&pf, &Rational::zero()), Rational::zero());
            }
        }
        assert_eq!(evaluate(&center(11), &r(-1, 2)), r(691, 16384));
    }

    #[test]
    fn derivative_examples() {
        let s10 = derivative(&center(11)).unwrap();
        assert_eq!(s10, center(10));

        let s2 = derivative(&center(3)).unwrap();
        assert_eq!(s2, center(2));

        // The input constant cannot influence the derivative.
        let mut tweaked = coeffs_by_witmer(3).unwrap();
        tweaked.constant = Some(r(123, 7));
        assert_eq!(derivative(&PolyForm::Center(tweaked)).unwrap(), center(2));

        assert!(matches!(derivative(&center(2)), Err(Error::ParityMismatch { .. })));
        assert_eq!(derivative(&center(1)), Err(Error::UnsupportedDegree(1)));
    }

    #[test]
    fn reflect_examples() {
        // Even p: composition negates every coefficient, zero constant.
        let s2 = power_basis_bernoulli(2);
        let reflected = reflect(&s2).unwrap();
        assert_eq!(reflected[0], Rational::zero());
        for (i, a) in s2.coefficients().iter().enumerate() {
            assert_eq!(reflected[i + 1], -a.clone());
        }

        // S_3 at n = 2 through the reflection: value at -(2+1) is 9.
        let s3 = power_basis_bernoulli(3);
        let reflected = reflect(&s3).unwrap();
        let two = Rational::from(2);
        let value: Rational = reflected
            .iter()
            .enumerate()
            .map(|(i, c)| c * &two.pow(i as i64))
            .sum();
        assert_eq!(value, Rational::from(9));

        // Odd p: composition is the identity on coefficients.
        let s1 = power_basis_bernoulli(1);
        let reflected = reflect(&s1).unwrap();
        assert_eq!(reflected, vec![Rational::zero(), r(1, 2), r(1, 2)]);
    }

    #[test]
    fn explicit_center_polynomial_examples() {
        assert_eq!(explicit_center_polynomial(10).unwrap(), center(10));
        let s11 = explicit_center_polynomial(11).unwrap();
        assert_eq!(s11, center(11));
        assert_eq!(s11.constant(), Some(&r(691, 16384)));

        let s1 = explicit_center_polynomial(1).unwrap();
        assert_eq!(s1.coefficients(), &[r(1, 2)]);
        assert_eq!(s1.constant(), Some(&r(-1, 8)));
    }

    /// Independent route to the s1 bracket: substitute
    /// N^2 = (1 + 8s)/4 into the center form and divide out the
    /// prefactor as polynomials in s.
    mod substitution_oracle {
        use super::*;

        fn poly_add(a: &mut Vec<Rational>, b: &[Rational]) {
            if a.len() < b.len() {
                a.resize(b.len(), Rational::zero());
            }
            for (slot, x) in a.iter_mut().zip(b) {
                *slot += x;
            }
        }

        fn poly_scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
            a.iter().map(|x| x * s).collect()
        }

        fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
            let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += &(x * y);
                }
            }
            out
        }

        /// Coefficients of ((1 + 8s)/4)^m as a polynomial in s.
        fn n_squared_power(m: usize) -> Vec<Rational> {
            let base = vec![r(1, 4), r(2, 1)];
            let mut acc = vec![Rational::one()];
            for _ in 0..m {
                acc = poly_mul(&acc, &base);
            }
            acc
        }

        fn bracket_by_substitution(c: &FaulhaberCoeffs) -> Vec<Rational> {
            // Q(x) = sum_m f_m x^m with x = N^2 rewritten in s.
            let mut q = Vec::new();
            for (m, fm) in c.f.iter().enumerate() {
                poly_add(&mut q, &poly_scale(&n_squared_power(m), fm));
            }
            match c.parity {
                Parity::Even => {
                    // S_2k = N * Q; S_2 = (2/3) N s, so the bracket is
                    // (3/2) Q / s. Q must vanish at s = 0.
                    assert!(q[0].is_zero());
                    q.remove(0);
                    q.iter().map(|x| x * &r(3, 2)).collect()
                }
                Parity::Odd => {
                    // S_2k+1 = constant + N^2 * Q = s^2 * bracket.
                    let mut full = poly_mul(&n_squared_power(1), &q);
                    full[0] += c.constant.as_ref().unwrap();
                    assert!(full[0].is_zero() && full[1].is_zero());
                    full.drain(0..2);
                    full
                }
            }
        }

        #[test]
        fn formulas_match_substitution() {
            for p in 2..=21u32 {
                let c = coeffs_by_recurrence(p).unwrap();
                let via_formula = center_to_s1(&PolyForm::Center(c.clone())).unwrap();
                let via_substitution = bracket_by_substitution(&c);
                assert_eq!(via_formula.coefficients(), via_substitution, "p = {p}");
            }
        }

        #[test]
        fn center_square_bridges_to_s1() {
            // (n + 1/2)^2 = (1 + 8 S_1(n))/4 as polynomials in n.
            let lhs = [r(1, 4), r(1, 1), r(1, 1)];
            let s1_poly = [Rational::zero(), r(1, 2), r(1, 2)];
            let mut rhs = poly_scale(&s1_poly, &r(2, 1));
            rhs[0] += &r(1, 4);
            assert_eq!(lhs.as_slice(), rhs.as_slice());
        }
    }

    #[test]
    fn text_rendering() {
        assert_eq!(
            center(1).text(),
            "S_1(n) = 1/2 N^2 - 1/8"
        );
        assert_eq!(
            center(10).text(),
            "S_10(n) = 1/11 N^11 - 5/12 N^9 + 7/8 N^7 - 31/32 N^5 + 127/256 N^3 - 2555/33792 N"
        );
        assert_eq!(
            generate(2, Basis::Power).unwrap().text(),
            "S_2(n) = 1/3 n^3 + 1/2 n^2 + 1/6 n"
        );
        assert_eq!(
            generate(10, Basis::S1).unwrap().text(),
            "S_10(n) = S_2(n) [5/11 - 30/11 S_1(n) + 68/11 S_1(n)^2 - 80/11 S_1(n)^3 + 48/11 S_1(n)^4]"
        );
        assert_eq!(
            generate(3, Basis::S1).unwrap().text(),
            "S_3(n) = S_1(n)^2 [1]"
        );
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(
            center(10).latex(),
            "S_{10}(n) = \\frac{1}{11}N^{11} - \\frac{5}{12}N^{9} + \\frac{7}{8}N^{7} - \\frac{31}{32}N^{5} + \\frac{127}{256}N^{3} - \\frac{2555}{33792}N"
        );
        assert_eq!(
            center(11).latex(),
            "S_{11}(n) = \\frac{1}{12}N^{12} - \\frac{11}{24}N^{10} + \\frac{77}{64}N^{8} - \\frac{341}{192}N^{6} + \\frac{1397}{1024}N^{4} - \\frac{2555}{6144}N^{2} + \\frac{691}{16384}"
        );
        assert_eq!(
            generate(11, Basis::S1).unwrap().latex(),
            "S_{11}(n) = \\big(S_1(n)\\big)^2 \\left[ \\frac{5}{3} - \\frac{20}{3}S_1(n) + \\frac{34}{3}\\big(S_1(n)\\big)^{2} - \\frac{32}{3}\\big(S_1(n)\\big)^{3} + \\frac{16}{3}\\big(S_1(n)\\big)^{4} \\right]"
        );
    }

    #[test]
    fn json_shape_is_stable() {
        assert_eq!(
            generate(2, Basis::Power).unwrap().to_json(),
            r#"{"p":2,"basis":"power","coefficients":["1/6","1/2","1/3"]}"#
        );
        assert_eq!(
            center(1).to_json(),
            r#"{"p":1,"basis":"center","coefficients":["1/2"],"constant":"-1/8"}"#
        );
        assert_eq!(
            generate(3, Basis::S1).unwrap().to_json(),
            r#"{"p":3,"basis":"s1","coefficients":["1"]}"#
        );
    }
}
