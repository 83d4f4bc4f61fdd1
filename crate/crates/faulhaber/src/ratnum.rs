//! Exact integer and rational arithmetic plus the combinatorial
//! primitives (binomials, double factorials, powers of two and four)
//! that every coefficient formula is built from.
//!
//! All arithmetic is exact. `Rational` keeps canonical form after every
//! operation: positive denominator, numerator and denominator coprime,
//! zero represented as `0/1`. Values are immutable and freely shareable.
//!
//! Every rational add/sub/mul/div also bumps a thread-local counter so
//! the bench command can report machine-independent operation counts.

use std::cell::Cell;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision signed integer: unique zero, decimal round-trip.
pub type Integer = BigInt;

/// Arbitrary-precision rational in canonical form.
///
/// Wraps [`num_rational::BigRational`], which reduces and normalizes the
/// sign on construction and after every operation. The wrapper adds the
/// `num/den` wire format used across the crate and the thread-local
/// operation counting used by the bench harness.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

/// Counts of exact rational operations on the current thread.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct OpCounts {
    pub add: u64,
    pub sub: u64,
    pub mul: u64,
    pub div: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.add + self.sub + self.mul + self.div
    }
}

thread_local! {
    static OP_COUNTS: Cell<OpCounts> = const { Cell::new(OpCounts { add: 0, sub: 0, mul: 0, div: 0 }) };
}

/// Zero the current thread's operation counters.
pub fn reset_op_counts() {
    OP_COUNTS.with(|c| c.set(OpCounts::default()));
}

/// Snapshot the current thread's operation counters.
pub fn op_counts() -> OpCounts {
    OP_COUNTS.with(|c| c.get())
}

macro_rules! bump {
    ($field:ident) => {
        OP_COUNTS.with(|c| {
            let mut v = c.get();
            v.$field += 1;
            c.set(v);
        })
    };
}

impl Rational {
    /// Canonical-form rational `num/den`. The sign is carried by the
    /// numerator; a zero denominator is a distinct error.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Self, Error> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<Integer>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact integer power; a negative exponent inverts.
    ///
    /// Panics when raising zero to a negative power.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let e = u32::try_from(exp.unsigned_abs()).expect("exponent too large");
        let (n, d) = (self.numer().pow(e), self.denom().pow(e));
        if exp > 0 {
            Rational(BigRational::new_raw(n, d))
        } else {
            assert!(!self.is_zero(), "zero cannot be raised to a negative power");
            Rational(BigRational::new(d, n))
        }
    }

    /// Round-trips through the exact `f64` only for display convenience
    /// in the bench harness; never used in any computation.
    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

fn add_impl(a: &Rational, b: &Rational) -> Rational {
    bump!(add);
    Rational(&a.0 + &b.0)
}

fn sub_impl(a: &Rational, b: &Rational) -> Rational {
    bump!(sub);
    Rational(&a.0 - &b.0)
}

fn mul_impl(a: &Rational, b: &Rational) -> Rational {
    bump!(mul);
    Rational(&a.0 * &b.0)
}

fn div_impl(a: &Rational, b: &Rational) -> Rational {
    assert!(!b.is_zero(), "rational division by zero");
    bump!(div);
    Rational(&a.0 / &b.0)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(self, &rhs)
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = sub_impl(self, rhs);
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Wire format: `num/den`, with `/den` omitted for integers.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let parse_int =
            |t: &str| Integer::from_str(t.trim()).map_err(|_| Error::ParseRational(s.to_owned()));
        match s.split_once('/') {
            Some((num, den)) => {
                let r = Rational::new(parse_int(num)?, parse_int(den)?);
                r.map_err(|_| Error::ParseRational(s.to_owned()))
            }
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Binomial coefficient C(n, r) by the multiplicative running-product
/// scheme; each intermediate is itself a binomial, so no factorial-sized
/// values appear. Out-of-range `r` (negative or above `n`) yields 0 so
/// formula code can follow summation bounds literally.
pub fn binomial(n: u64, r: i64) -> Integer {
    if r < 0 || r as u64 > n {
        return Integer::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut result = Integer::one();
    for i in 1..=r {
        // result * (n - r + i) is always divisible by i: the quotient is
        // the binomial C(n - r + i, i).
        result = result * Integer::from(n - r + i) / Integer::from(i);
    }
    result
}

/// Double factorial n!! = n(n-2)(n-4)..., ending at 2 or 1, with the
/// conventions (-1)!! = 1 and 0!! = 1.
///
/// Panics for n < -1.
pub fn double_factorial(n: i64) -> Integer {
    assert!(n >= -1, "double factorial is defined only for n >= -1, got {n}");
    let mut result = Integer::one();
    let mut i = n;
    while i >= 2 {
        result *= Integer::from(i);
        i -= 2;
    }
    result
}

/// Exact 2^exp as a rational; negative exponents give the reciprocal.
pub fn pow2(exp: i64) -> Rational {
    let mag = Integer::one() << exp.unsigned_abs() as usize;
    if exp >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(Integer::one(), mag).expect("power of two is nonzero")
    }
}

/// Exact 4^exp as a rational; negative exponents give the reciprocal.
pub fn pow4(exp: i64) -> Rational {
    pow2(2 * exp)
}
