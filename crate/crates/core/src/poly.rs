//! Univariate polynomials in the formal variable `a` over the rationals.
//!
//! This is the scalar domain used by the monad pipeline, where ranks and
//! Chern-class coefficients are polynomials in the symbolic parameter `a`.
//! Includes falling-factorial binomial coefficients with a polynomial upper
//! argument and rational-root extraction with multiplicities.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::scalar::{rat_string, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("coefficient too large for rational root enumeration")]
    CoefficientTooLarge,
}

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::new(vec![c])
    }

    /// The variable `a` itself.
    pub fn var() -> Self {
        RatPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// Coefficients from integer literals, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        RatPoly::new(cs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&Rat::from_integer(BigInt::from(x)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = RatPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Lowest-degree-first coefficient strings; `["0"]` for the zero polynomial.
    pub fn coeff_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(rat_string).collect()
    }

    /// Exact division by `a - root`, returning the quotient when the
    /// remainder vanishes.
    fn deflate(&self, root: &Rat) -> Option<RatPoly> {
        if self.is_zero() {
            return None;
        }
        // Synthetic division, highest coefficient first.
        let mut quotient = vec![Rat::zero(); self.coeffs.len() - 1];
        let mut carry = Rat::zero();
        for k in (0..self.coeffs.len()).rev() {
            let value = &self.coeffs[k] + &carry;
            if k == 0 {
                if !value.is_zero() {
                    return None;
                }
            } else {
                carry = &value * root;
                quotient[k - 1] = value;
            }
        }
        Some(RatPoly::new(quotient))
    }

    /// All rational roots with multiplicities, sorted ascending.
    ///
    /// Uses the rational root theorem on the denominator-cleared integer
    /// polynomial. Errors when the polynomial is identically zero.
    pub fn rational_roots(&self) -> Result<Vec<(Rat, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut roots: Vec<(Rat, usize)> = Vec::new();
        let mut work = self.clone();

        // Factor out the root at zero first.
        let mut zero_mult = 0usize;
        while !work.coeffs.is_empty() && work.coeffs[0].is_zero() {
            work = work.deflate(&Rat::zero()).expect("zero divides");
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Rat::zero(), zero_mult));
        }
        if work.degree().unwrap_or(0) == 0 {
            roots.sort_by(|x, y| x.0.cmp(&y.0));
            return Ok(roots);
        }

        // Clear denominators to an integer polynomial.
        let mut lcm = BigInt::one();
        for c in &work.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = work
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let constant = ints.first().expect("nonzero").magnitude().clone();
        let leading = ints.last().expect("nonzero").magnitude().clone();
        let p_divs = divisors(&BigInt::from(constant))?;
        let q_divs = divisors(&BigInt::from(leading))?;

        let mut candidates: Vec<Rat> = Vec::new();
        for p in &p_divs {
            for q in &q_divs {
                let c = Rat::new(p.clone(), q.clone());
                if !candidates.contains(&c) {
                    candidates.push(c.clone());
                    candidates.push(-c);
                }
            }
        }
        candidates.sort();

        for cand in candidates {
            let mut mult = 0usize;
            while work.eval(&cand).is_zero() {
                work = work.deflate(&cand).expect("root divides");
                mult += 1;
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
        }
        roots.sort_by(|x, y| x.0.cmp(&y.0));
        Ok(roots)
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, PolyError> {
    let n = n.abs();
    let small = n.to_u64().ok_or(PolyError::CoefficientTooLarge)?;
    if small > 10_000_000_000 {
        return Err(PolyError::CoefficientTooLarge);
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d != small / d {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    if small == 0 {
        out.push(BigInt::one());
    }
    out.sort();
    Ok(out)
}

/// Binomial coefficient with a polynomial upper argument:
/// `binom(p, m) = p (p-1) ... (p-m+1) / m!`.
///
/// Evaluating at integer points reproduces the usual binomial values,
/// including the vanishing ones and the negative-argument identities.
pub fn binom_poly(p: &RatPoly, m: u32) -> RatPoly {
    let mut acc = RatPoly::one();
    let mut fact = Rat::one();
    for j in 0..m {
        let shifted = p - &RatPoly::constant(Rat::from_integer(BigInt::from(j)));
        acc = &acc * &shifted;
        fact *= Rat::from_integer(BigInt::from(j + 1));
    }
    acc.scale(&(Rat::one() / fact))
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        RatPoly::new(out)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        RatPoly::new(out)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coeffs.iter().enumerate() {
                out[i + j] += ci * cj;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, other: RatPoly) -> RatPoly {
        &self + &other
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, other: RatPoly) -> RatPoly {
        &self * &other
    }
}

impl Zero for RatPoly {
    fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for RatPoly {
    fn one() -> Self {
        RatPoly::constant(Rat::one())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{}", rat_string(&mag))?,
                (1, true) => write!(f, "a")?,
                (1, false) => write!(f, "{}*a", rat_string(&mag))?,
                (_, true) => write!(f, "a^{k}")?,
                (_, false) => write!(f, "{}*a^{k}", rat_string(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn poly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let p = RatPoly::from_ints(&[1, 2]); // 2a + 1
        let q = RatPoly::from_ints(&[-1, 2]); // 2a - 1
        assert_eq!(&p * &q, RatPoly::from_ints(&[-1, 0, 4]));
        assert_eq!(&p + &q, RatPoly::from_ints(&[0, 4]));
        assert_eq!(&p - &p, RatPoly::zero());
        assert_eq!(p.eval_int(3), rat_int_7());
    }

    fn rat_int_7() -> Rat {
        rat(7, 1)
    }

    #[test]
    fn display_forms() {
        let p = poly(&[(2, 1), (-23, 12), (1, 12)]);
        assert_eq!(p.to_string(), "1/12*a^2 - 23/12*a + 2");
        assert_eq!(RatPoly::zero().to_string(), "0");
        assert_eq!(RatPoly::var().to_string(), "a");
        assert_eq!(RatPoly::from_ints(&[0, 0, -1]).to_string(), "-a^2");
    }

    #[test]
    fn binomial_with_polynomial_upper_argument() {
        let a = RatPoly::var();
        let b4 = binom_poly(&a, 4);
        // Integer points reproduce ordinary binomial values.
        assert_eq!(b4.eval_int(6), rat(15, 1));
        assert_eq!(b4.eval_int(3), rat(0, 1));
        assert_eq!(b4.eval_int(-1), rat(1, 1));
        let b2 = binom_poly(&(&a - &RatPoly::from_ints(&[2])), 2);
        assert_eq!(b2.eval_int(1), rat(1, 1)); // binom(-1, 2) = 1
        assert_eq!(binom_poly(&a, 0), RatPoly::one());
    }

    #[test]
    fn quartic_rational_roots() {
        // -(5/216) a (a-2) (a-3) (a-4/5), expanded lowest degree first.
        let phi = poly(&[(0, 1), (24, 216), (-50, 216), (29, 216), (-5, 216)]);
        let roots = phi.rational_roots().unwrap();
        assert_eq!(
            roots,
            vec![
                (rat(0, 1), 1),
                (rat(4, 5), 1),
                (rat(2, 1), 1),
                (rat(3, 1), 1)
            ]
        );
    }

    #[test]
    fn repeated_roots_and_errors() {
        // (a-1)^2 (a+2)
        let p = RatPoly::from_ints(&[2, -3, 0, 1]);
        let roots = p.rational_roots().unwrap();
        assert_eq!(roots, vec![(rat(-2, 1), 1), (rat(1, 1), 2)]);
        assert_eq!(
            RatPoly::zero().rational_roots(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    proptest! {
        #[test]
        fn mul_commutes_with_evaluation(
            xs in proptest::collection::vec(-6i64..6, 0..5),
            ys in proptest::collection::vec(-6i64..6, 0..5),
            at in -4i64..4,
        ) {
            let p = RatPoly::from_ints(&xs);
            let q = RatPoly::from_ints(&ys);
            let lhs = (&p * &q).eval_int(at);
            let rhs = p.eval_int(at) * q.eval_int(at);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(&p * &q, &q * &p);
        }
    }
}
