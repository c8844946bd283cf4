//! Polynomials and generating functions in `t` over [`CycNumber`].

mod factor;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycNumber, Rational};
use crate::error::{Error, Result};

pub use factor::{
    cyclotomic_factorization, default_order_bound, palindrome_check, Factorization,
    PalindromeKind, PalindromeReport,
};
pub use rational::{
    expand, laurent_at_one, reconstruct_rational, FactoredRational, LaurentExpansion,
};

/// Dense polynomial, constant term first, trailing zeros stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<CycNumber>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<CycNumber>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| CycNumber::from_integer(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(CycNumber::one())
    }

    pub fn constant(c: CycNumber) -> Self {
        Self::new(vec![c])
    }

    pub fn t() -> Self {
        Self::monomial(CycNumber::one(), 1)
    }

    pub fn monomial(c: CycNumber, d: usize) -> Self {
        let mut v = vec![CycNumber::zero(); d + 1];
        v[d] = c;
        Self::new(v)
    }

    /// 1 − λt.
    pub fn linear_factor(lambda: &CycNumber) -> Self {
        Self::new(vec![CycNumber::one(), -lambda])
    }

    pub fn coeffs(&self) -> &[CycNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> CycNumber {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> CycNumber {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &CycNumber) -> CycNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(CycNumber::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(BigInt::from(i))))
                .collect(),
        )
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// p(1 − s) as a polynomial in s.
    pub fn shift_one_minus(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![CycNumber::zero(); n];
        // Binomial rows built incrementally.
        let mut binom: Vec<BigInt> = vec![BigInt::one()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                let mut next = vec![BigInt::one(); i + 1];
                for j in 1..i {
                    next[j] = &binom[j - 1] + &binom[j];
                }
                binom = next;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in binom.iter().enumerate() {
                let sign = if j % 2 == 0 { b.clone() } else { -b.clone() };
                out[j] += &a.scale(&Rational::from_integer(sign));
            }
        }
        Self::new(out)
    }

    pub fn galois_map(&self, p: i64) -> Result<Self> {
        Ok(Self::new(
            self.coeffs
                .iter()
                .map(|c| c.galois_map(p))
                .collect::<Result<_>>()?,
        ))
    }

    /// Exact division by 1 − λt; `None` when there is a remainder.
    pub fn div_linear(&self, lambda: &CycNumber) -> Option<Self> {
        let n = self.degree()?;
        if n == 0 {
            return None;
        }
        let mut q = Vec::with_capacity(n);
        let mut prev = CycNumber::zero();
        for i in 0..n {
            let qi = &self.coeffs[i] + &(lambda * &prev);
            q.push(qi.clone());
            prev = qi;
        }
        (&self.coeffs[n] + &(lambda * &prev)).is_zero().then(|| Self::new(q))
    }

    /// Exact quotient; errors when the divisor does not divide.
    pub fn div_exact(&self, d: &Poly) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Precondition(format!("{d} does not divide {self}")))
        }
    }

    pub fn div_rem(&self, d: &Poly) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inverse()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![CycNumber::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] -= &(&c * dj);
            }
            q[i] = c;
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Truncated power series of 1/self to degree `d`; needs a nonzero constant term.
    pub fn series_inverse(&self, d: usize) -> Result<Vec<CycNumber>> {
        series_inverse(&self.coeffs, d)
    }

    /// The reversed polynomial t^deg · p(1/t).
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }
}

/// Coefficients 0..=d of 1/a as a power series.
pub fn series_inverse(a: &[CycNumber], d: usize) -> Result<Vec<CycNumber>> {
    let a0 = a.first().ok_or(Error::DivisionByZero)?;
    let inv0 = a0.inverse()?;
    let mut out: Vec<CycNumber> = Vec::with_capacity(d + 1);
    out.push(inv0.clone());
    for k in 1..=d {
        let mut s = CycNumber::zero();
        for j in 1..=k.min(a.len().saturating_sub(1)) {
            if a[j].is_zero() {
                continue;
            }
            s += &(&a[j] * &out[k - j]);
        }
        out.push(-(&s * &inv0));
    }
    Ok(out)
}

/// Coefficients 0..=d of a·b.
pub fn series_mul(a: &[CycNumber], b: &[CycNumber], d: usize) -> Vec<CycNumber> {
    let mut out = vec![CycNumber::zero(); d + 1];
    for (i, x) in a.iter().enumerate().take(d + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(d + 1 - i) {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    out
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let d = self.coeffs.len() + rhs.coeffs.len() - 2;
        Poly::new(series_mul(&self.coeffs, &rhs.coeffs, d))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Wraps a coefficient in parentheses when it is a sum.
pub(crate) fn paren(c: &CycNumber) -> String {
    let s = c.to_string();
    if s[1..].contains(" + ") || s[1..].contains(" - ") {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut s = paren(c);
            let neg = s.starts_with('-') && !s.starts_with("(");
            if neg {
                s.remove(0);
            }
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            match (i, s.as_str()) {
                (0, _) => f.write_str(&s)?,
                (_, "1") => f.write_str(&mono)?,
                _ => write!(f, "{s}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ratfunc;

    #[test]
    fn arithmetic() {
        let a = Poly::from_ints(&[1, -1]);
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[1, 0, -1]));
        assert_eq!((&a * &b).div_exact(&a).unwrap(), b);
        assert_eq!(Poly::from_ints(&[1, 0, -1]).div_linear(&CycNumber::one()), Some(b.clone()));
        assert_eq!(Poly::from_ints(&[1, 0, 1]).div_linear(&CycNumber::one()), None);
        assert_eq!(Poly::from_ints(&[0, 0, 3]).derivative(), Poly::from_ints(&[0, 6]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn shift() {
        // p(t) = t^2 → (1-s)^2 = 1 - 2s + s^2
        assert_eq!(Poly::from_ints(&[0, 0, 1]).shift_one_minus(), Poly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn display_round_trip() {
        let p = Poly::new(vec![
            CycNumber::one(),
            -CycNumber::i(),
            CycNumber::zeta(6, 1) + CycNumber::from_integer(2),
            CycNumber::from_integer(-3),
        ]);
        let s = p.to_string();
        let back = parse_ratfunc(&s).unwrap();
        assert!(back.den.is_one());
        assert_eq!(back.num, p, "{s}");
    }

    #[test]
    fn inverse_series() {
        let inv = Poly::from_ints(&[1, -1]).series_inverse(5).unwrap();
        assert!(inv.iter().all(|c| c.is_one()));
    }
}
