//! The lower-triangular coefficient systems and the structured
//! Hessenberg determinants behind the coefficient formulas.
//!
//! For degree p = 2k (or 2k + 1) the unknown coefficient vector
//! f_0 .. f_k satisfies k+1 linear equations indexed j = 0 .. k whose
//! entry at (j, m) is nonzero only for m >= j, with right-hand side
//! delta_{j,k}. Unknowns are stored in ascending index order f_0 .. f_k;
//! the alternative presentation that orders them f_k .. f_0 is the same
//! system under the simultaneous row-and-column reversal, which leaves
//! every leading-diagonal product and determinant unchanged.

use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::ratnum::{binomial, pow4, Rational};

/// Parity of the power-sum degree: p = 2k is `Even`, p = 2k+1 is `Odd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(p: u32) -> Parity {
        if p % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for Parity {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// The exact linear system whose solution is the coefficient vector
/// f_0 .. f_k. Entry (j, m) is defined for j <= m <= k; everything
/// below that band is zero. The right-hand side has a single 1 in the
/// last slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularSystem {
    parity: Parity,
    k: u32,
    /// rows[j] holds entries for m = j ..= k.
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl TriangularSystem {
    /// Number of unknowns, k + 1.
    pub fn order(&self) -> usize {
        self.k as usize + 1
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Entry in equation `j` for unknown `m`; zero for m < j.
    pub fn entry(&self, j: usize, m: usize) -> Rational {
        assert!(j < self.order() && m < self.order(), "index out of range");
        if m < j {
            Rational::zero()
        } else {
            self.rows[j][m - j].clone()
        }
    }

    pub fn rhs(&self, j: usize) -> &Rational {
        &self.rhs[j]
    }
}

/// Build the order-(k+1) system for S_{2k} (even) or S_{2k+1} (odd):
/// entry (j, m) is 4^{j-m} C(2m+1, 2j), respectively 4^{j-m} C(2m+2, 2j+1).
pub fn build_system(parity: Parity, k: u32) -> TriangularSystem {
    let n = k as usize + 1;
    let mut rows = Vec::with_capacity(n);
    for j in 0..=k as u64 {
        let row = (j..=k as u64)
            .map(|m| {
                let b = match parity {
                    Parity::Even => binomial(2 * m + 1, 2 * j as i64),
                    Parity::Odd => binomial(2 * m + 2, 2 * j as i64 + 1),
                };
                pow4(j as i64 - m as i64) * Rational::from_integer(b)
            })
            .collect();
        rows.push(row);
    }
    let mut rhs = vec![Rational::zero(); n];
    rhs[n - 1] = Rational::one();
    TriangularSystem { parity, k, rows, rhs }
}

/// Exact back-substitution, last equation first. The diagonal of any
/// system from [`build_system`] is nonzero by construction, but a zero
/// diagonal is still reported rather than assumed away.
pub fn solve_triangular(sys: &TriangularSystem) -> Result<Vec<Rational>, Error> {
    let n = sys.order();
    let mut solution = vec![Rational::zero(); n];
    for j in (0..n).rev() {
        let mut acc = sys.rhs(j).clone();
        for m in j + 1..n {
            acc -= &(sys.entry(j, m) * &solution[m]);
        }
        let diag = sys.entry(j, j);
        if diag.is_zero() {
            return Err(Error::SingularDiagonal(j));
        }
        solution[j] = acc / diag;
    }
    Ok(solution)
}

/// A square matrix that is zero above the first superdiagonal, stored
/// densely. Its determinant satisfies an O(n^2) last-row recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergMatrix {
    order: usize,
    entries: Vec<Vec<Rational>>,
}

impl HessenbergMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }
}

/// The order-j matrix whose determinant is Delta_j (even parity) or
/// Delta'_j (odd parity) for degree 2k or 2k+1. Requires 1 <= j <= k.
pub fn build_delta(parity: Parity, k: u32, j: u32) -> Result<HessenbergMatrix, Error> {
    if j < 1 || j > k {
        return Err(Error::IndexOutOfRange { j, k });
    }
    let n = j as usize;
    let mut entries = vec![vec![Rational::zero(); n]; n];
    for (r, row) in entries.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate().take(r + 2) {
            let top = match parity {
                Parity::Even => 2 * k as u64 - 2 * c as u64 + 1,
                Parity::Odd => 2 * k as u64 - 2 * c as u64 + 2,
            };
            let bottom = 2 * r as i64 - 2 * c as i64 + 3;
            let b = binomial(top, bottom);
            if !b.is_zero() {
                *slot = pow4(c as i64 - r as i64 - 1) * Rational::from_integer(b);
            }
        }
    }
    Ok(HessenbergMatrix { order: n, entries })
}

/// Exact determinant by the lower-Hessenberg recurrence: with d_0 = 1,
/// the leading s x s minor is
///
/// ```text
/// d_s = sum_{c=0}^{s-1} (-1)^{s-1-c} a[s-1][c] (prod_{i=c}^{s-2} a[i][i+1]) d_c
/// ```
///
/// which expands along the last row and costs O(n^2) rational operations.
pub fn determinant(m: &HessenbergMatrix) -> Rational {
    let n = m.order();
    let mut minors = Vec::with_capacity(n + 1);
    minors.push(Rational::one());
    for s in 1..=n {
        let mut acc = Rational::zero();
        let mut super_prod = Rational::one();
        let mut sign_negative = false;
        for c in (0..s).rev() {
            let term = m.entry(s - 1, c) * &super_prod * &minors[c];
            if sign_negative {
                acc -= &term;
            } else {
                acc += &term;
            }
            if c > 0 {
                super_prod *= m.entry(c - 1, c);
                sign_negative = !sign_negative;
            }
        }
        minors.push(acc);
    }
    minors.pop().expect("at least the empty minor is present")
}

/// |M_j|: the product of the leading j+1 diagonal entries of the full
/// system matrix, in the presentation whose diagonal runs from the
/// highest coefficient down. Even parity gives (2k+1)!!/(2k-2j-1)!!,
/// odd parity the analogous ratio of even double factorials.
pub fn system_determinant(parity: Parity, k: u32, j: u32) -> Result<Rational, Error> {
    if j > k {
        return Err(Error::IndexOutOfRange { j, k });
    }
    let mut product = Rational::one();
    for r in 0..=j as u64 {
        let diag = match parity {
            Parity::Even => 2 * k as u64 - 2 * r + 1,
            Parity::Odd => 2 * k as u64 - 2 * r + 2,
        };
        product *= &Rational::from(diag as u32);
    }
    Ok(product)
}
