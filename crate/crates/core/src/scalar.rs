//! Scalar domains for ring elements and bundle data.
//!
//! Two domains are supported: exact rationals and univariate polynomials
//! in the formal variable `a` with rational coefficients. Everything the
//! rest of the crate does with coefficients goes through the [`Scalar`]
//! trait, so graded rings, Chern classes and Euler characteristics can be
//! computed over either domain with the same code path.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::RatPoly;

/// Arbitrary-precision rational number. All arithmetic in this crate is exact.
pub type Rat = num_rational::BigRational;

/// Shorthand for a rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form of a rational: `p/q` in lowest terms with `q > 0`,
/// written without the denominator when it is 1.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the canonical rational form accepted by [`rat_string`].
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Coefficient domain for presented-ring elements and bundle classes.
///
/// Implementations must be exact: no rounding anywhere. `to_rat` returns
/// `Some` exactly when the scalar lies in the embedded copy of the
/// rationals; it is what lets linear solvers insist on invertible pivots.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn from_rat(r: &Rat) -> Self;
    /// The inverse of `from_rat` on constants; `None` otherwise.
    fn to_rat(&self) -> Option<Rat>;
    /// Exact division by a nonzero rational.
    fn div_rat(&self, r: &Rat) -> Self;

    fn mul_rat(&self, r: &Rat) -> Self {
        self.mul_ref(&Self::from_rat(r))
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&rat_int(n))
    }

    /// JSON form of the coefficient: a string for rationals, a
    /// lowest-degree-first coefficient array for polynomials.
    fn to_json(&self) -> serde_json::Value;
}

impl Scalar for Rat {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn div_rat(&self, r: &Rat) -> Self {
        assert!(!r.is_zero(), "division by zero rational");
        self / r
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(rat_string(self))
    }
}

impl Scalar for RatPoly {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rat(r: &Rat) -> Self {
        RatPoly::constant(r.clone())
    }
    fn to_rat(&self) -> Option<Rat> {
        self.as_constant()
    }
    fn div_rat(&self, r: &Rat) -> Self {
        assert!(!r.is_zero(), "division by zero rational");
        self.scale(&(rat_int(1) / r))
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeff_strings()
                .into_iter()
                .map(serde_json::Value::String)
                .collect(),
        )
    }
}

/// True when the rational is an integer.
pub fn is_integral(r: &Rat) -> bool {
    r.denom().is_one()
}
