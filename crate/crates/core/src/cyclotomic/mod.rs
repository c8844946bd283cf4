//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! A [`CycNumber`] stores power-basis coefficients modulo Φ_N. Every value
//! carries its own conductor; binary operations lift both sides to the lcm.

mod number_theory;
mod root;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use number_theory::{
    cyclotomic_poly, divisors, factorize, gcd, lcm, mobius, number_theory, primitive_root_sum,
    primorial, totient, NumberTheory,
};
pub use root::RootOfUnity;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug)]
pub struct CycNumber {
    conductor: u64,
    // Coefficients of ζ^0 .. ζ^(φ(N)-1); trailing zeros stripped.
    coeffs: Vec<Rational>,
}

impl CycNumber {
    pub fn zero() -> Self {
        CycNumber { conductor: 1, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        let coeffs = if r.is_zero() { Vec::new() } else { vec![r] };
        CycNumber { conductor: 1, coeffs }
    }

    /// ζ_n^k, `k` taken modulo `n`.
    pub fn zeta(n: u64, k: i64) -> Self {
        assert!(n >= 1, "zeta(0, _)");
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        Self::reduced(n, poly)
    }

    /// i = ζ_4.
    pub fn i() -> Self {
        Self::zeta(4, 1)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The rational value, if this number lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    // Reduce an arbitrary coefficient vector modulo Φ_n.
    fn reduced(n: u64, mut poly: Vec<Rational>) -> Self {
        let phi = cyclotomic_poly(n);
        let d = phi.len() - 1;
        if poly.len() > d {
            for i in (d..poly.len()).rev() {
                if poly[i].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut poly[i], Rational::zero());
                for (j, &pj) in phi[..d].iter().enumerate() {
                    match pj {
                        0 => {}
                        1 => poly[i - d + j] -= &c,
                        -1 => poly[i - d + j] += &c,
                        _ => poly[i - d + j] -= &c * Rational::from_integer(BigInt::from(pj)),
                    }
                }
            }
            poly.truncate(d);
        }
        while poly.last().is_some_and(|c| c.is_zero()) {
            poly.pop();
        }
        let conductor = if poly.len() <= 1 { 1 } else { n };
        CycNumber { conductor, coeffs: poly }
    }

    /// Re-express at conductor `m`, which must be a multiple of the current one.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.conductor), "lift {} -> {}", self.conductor, m);
        if m == self.conductor || self.coeffs.len() <= 1 {
            let mut out = self.clone();
            if self.coeffs.len() > 1 {
                out.conductor = m;
            }
            return out;
        }
        let f = (m / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * f + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            poly[e * f] = c.clone();
        }
        Self::reduced(m, poly)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self, u64) {
        let m = lcm(a.conductor, b.conductor);
        (a.lift(m), b.lift(m), m)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow((-e) as u32))
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // Extended Euclid in ℚ[x] between the representative and Φ_N.
        let n = self.conductor;
        let phi: Vec<Rational> = cyclotomic_poly(n)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        let (g, s) = poly_ext_gcd(self.coeffs.clone(), phi);
        debug_assert_eq!(g.len(), 1, "Φ_N is irreducible");
        let inv_g = g[0].recip();
        let s: Vec<Rational> = s.into_iter().map(|c| c * &inv_g).collect();
        Ok(Self::reduced(n, s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// The Galois automorphism Ξ_p : ζ_N ↦ ζ_N^p.
    pub fn galois_map(&self, p: i64) -> Result<Self> {
        let mut a = std::borrow::Cow::Borrowed(self);
        let n = a.conductor as i64;
        if gcd(p.rem_euclid(n) as u64, n as u64) != 1 {
            a = std::borrow::Cow::Owned(self.minimize());
        }
        let n = a.conductor;
        let pm = p.rem_euclid(n as i64) as u64;
        if gcd(pm, n) != 1 {
            return Err(Error::NotCoprime { p, conductor: n });
        }
        if a.coeffs.len() <= 1 {
            return Ok(a.into_owned());
        }
        let mut poly = vec![Rational::zero(); n as usize];
        for (e, c) in a.coeffs.iter().enumerate() {
            poly[(e as u64 * pm % n) as usize] += c;
        }
        Ok(Self::reduced(n, poly))
    }

    /// Complex conjugation, Ξ_{N-1}.
    pub fn conjugate(&self) -> Self {
        self.galois_map(-1).expect("-1 is a unit modulo every conductor")
    }

    /// Returns `(w, k)` with self = ζ_w^k in lowest terms, if self is a root of unity.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return if r.is_one() {
                Some(RootOfUnity::ONE)
            } else if (-r).is_one() {
                Some(RootOfUnity::MINUS_ONE)
            } else {
                None
            };
        }
        let n = self.conductor;
        // Roots of unity of ℚ(ζ_N) have order dividing lcm(N, 2).
        let m = lcm(n, 2);
        let a = self.lift(m);
        (0..m as i64)
            .find(|&j| a == CycNumber::zeta(m, j))
            .map(|j| RootOfUnity::new(m, j))
    }

    /// The same value at the smallest conductor that contains it.
    pub fn minimize(&self) -> Self {
        let n = self.conductor;
        if self.coeffs.len() <= 1 {
            return self.clone();
        }
        for m in divisors(n) {
            if m == n {
                break;
            }
            // Membership: fixed by every Ξ_p with p ≡ 1 (mod m).
            let fixed = (1..n)
                .filter(|&p| gcd(p, n) == 1 && p % m == 1 % m)
                .all(|p| self.galois_map_unchecked(p) == *self);
            if fixed {
                if let Some(v) = self.descend(m) {
                    return v;
                }
            }
        }
        self.clone()
    }

    fn galois_map_unchecked(&self, p: u64) -> Self {
        let n = self.conductor;
        let mut poly = vec![Rational::zero(); n as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            poly[(e as u64 * p % n) as usize] += c;
        }
        Self::reduced(n, poly)
    }

    // Solve for coordinates in the ℚ(ζ_m) power basis.
    fn descend(&self, m: u64) -> Option<Self> {
        let n = self.conductor;
        let dm = totient(m) as usize;
        let dn = totient(n) as usize;
        let basis: Vec<Self> = (0..dm).map(|k| Self::zeta(m, k as i64).lift(n)).collect();
        // Augmented system: rows = coordinates at conductor n.
        let mut rows: Vec<Vec<Rational>> = (0..dn)
            .map(|r| {
                let mut row: Vec<Rational> = basis
                    .iter()
                    .map(|b| b.coeffs.get(r).cloned().unwrap_or_else(Rational::zero))
                    .collect();
                row.push(self.coeffs.get(r).cloned().unwrap_or_else(Rational::zero));
                row
            })
            .collect();
        let sol = solve_rational(&mut rows, dm)?;
        let v = Self::reduced(m, sol);
        (v == *self).then_some(v)
    }

    /// Approximate complex value; for pruning and display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (e, c)| {
            let a = std::f64::consts::TAU * e as f64 / n;
            let c = c.to_f64().unwrap_or(f64::NAN);
            (re + c * a.cos(), im + c * a.sin())
        })
    }

    /// Coefficients lifted to conductor `m`, padded to φ(m); a hashable key.
    pub fn key_at(&self, m: u64) -> Vec<Rational> {
        let mut v = self.lift(m).coeffs;
        v.resize(totient(m) as usize, Rational::zero());
        v
    }
}

// Gauss-Jordan on an augmented rational system; returns one solution.
fn solve_rational(rows: &mut [Vec<Rational>], nvars: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..=nvars {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[nvars].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); nvars];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][nvars].clone();
    }
    Some(sol)
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_rem_quot(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let lead_inv = b[db].recip();
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    (trim(q), trim(r))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

// Returns (g, s) with s·a ≡ g (mod b), g = gcd(a, b).
fn poly_ext_gcd(a: Vec<Rational>, b: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (trim(a), trim(b));
    let (mut s0, mut s1) = (vec![Rational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = poly_rem_quot(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = lcm(self.conductor, other.conductor);
        self.lift(m).coeffs == other.lift(m).coeffs
    }
}

impl Eq for CycNumber {}

impl Default for CycNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycNumber {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for CycNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<RootOfUnity> for CycNumber {
    fn from(r: RootOfUnity) -> Self {
        r.to_cyc()
    }
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (a, b, m) = CycNumber::common(self, rhs);
        let mut c = a.coeffs;
        if c.len() < b.coeffs.len() {
            c.resize(b.coeffs.len(), Rational::zero());
        }
        for (i, x) in b.coeffs.iter().enumerate() {
            c[i] += x;
        }
        CycNumber::reduced(m, c)
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if self.is_zero() || rhs.is_zero() {
            return CycNumber::zero();
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(&r);
        }
        let (a, b, m) = CycNumber::common(self, rhs);
        CycNumber::reduced(m, poly_mul(&a.coeffs, &b.coeffs))
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(mut self) -> CycNumber {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycNumber> for &'a CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<'a> Div<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    /// Panics on a zero divisor; use [`CycNumber::checked_div`] otherwise.
    fn div(self, rhs: &CycNumber) -> CycNumber {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<CycNumber> for CycNumber {
    type Output = CycNumber;
    fn div(self, rhs: CycNumber) -> CycNumber {
        &self / &rhs
    }
}

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        if rhs.is_zero() {
            return;
        }
        if self.conductor == rhs.conductor {
            if self.coeffs.len() < rhs.coeffs.len() {
                self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
            }
            for (i, x) in rhs.coeffs.iter().enumerate() {
                self.coeffs[i] += x;
            }
            while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                self.coeffs.pop();
            }
            if self.coeffs.len() <= 1 {
                self.conductor = 1;
            }
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycNumber> for CycNumber {
    fn sub_assign(&mut self, rhs: &CycNumber) {
        *self += &(-rhs);
    }
}

impl MulAssign<&CycNumber> for CycNumber {
    fn mul_assign(&mut self, rhs: &CycNumber) {
        *self = &*self * rhs;
    }
}

impl Zero for CycNumber {
    fn zero() -> Self {
        CycNumber::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for CycNumber {
    fn one() -> Self {
        CycNumber::one()
    }
}

impl std::iter::Sum for CycNumber {
    fn sum<I: Iterator<Item = CycNumber>>(iter: I) -> Self {
        iter.fold(CycNumber::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNumber {
    /// Renders in the coefficient grammar; `parse(to_string(a)) == a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return f.write_str(&fmt_rational(&r));
        }
        if let Some(root) = self.as_root_of_unity() {
            return write!(f, "{root}");
        }
        let a = self.minimize();
        let n = a.conductor;
        let mut first = true;
        for (e, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => f.write_str(&fmt_rational(&mag))?,
                (_, true) => write!(f, "zeta({n},{e})")?,
                (_, false) => write!(f, "{}*zeta({n},{e})", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl FromStr for CycNumber {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_cyc(s)
    }
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}


/// Serde adapter writing a [`Rational`] as the string "p/q" (or "p").
pub mod rational_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::Rational;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&r.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .transpose()
        }
    }
}
