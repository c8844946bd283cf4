use std::fmt;

use serde::{Deserialize, Serialize};

use super::{paren, series_inverse, series_mul, Poly};
use crate::cyclotomic::{CycNumber, RootOfUnity};
use crate::error::{Error, Result};
use crate::parse::RatFunc;

/// `numerator / ∏ (1 − λt)^m` with every λ a root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredRational {
    pub numerator: Poly,
    pub denom_factors: Vec<(RootOfUnity, u32)>,
}

impl FactoredRational {
    pub fn new(numerator: Poly, mut denom_factors: Vec<(RootOfUnity, u32)>) -> Self {
        denom_factors.retain(|&(_, m)| m > 0);
        denom_factors.sort();
        // Merge repeated roots.
        let mut merged: Vec<(RootOfUnity, u32)> = Vec::new();
        for (r, m) in denom_factors {
            match merged.last_mut() {
                Some((q, k)) if *q == r => *k += m,
                _ => merged.push((r, m)),
            }
        }
        FactoredRational { numerator, denom_factors: merged }
    }

    /// 1/(1−t)^n.
    pub fn polynomial_ring(n: u32) -> Self {
        Self::new(Poly::one(), vec![(RootOfUnity::ONE, n)])
    }

    /// 1 over the polynomial whose linear factors are listed.
    pub fn reciprocal_of(roots: &[(RootOfUnity, u32)]) -> Self {
        Self::new(Poly::one(), roots.to_vec())
    }

    pub fn denominator_poly(&self) -> Poly {
        self.denom_factors.iter().fold(Poly::one(), |acc, (r, m)| {
            &acc * &Poly::linear_factor(&r.to_cyc()).pow(*m)
        })
    }

    pub fn denominator_degree(&self) -> usize {
        self.denom_factors.iter().map(|&(_, m)| m as usize).sum()
    }

    /// Multiplicity of the factor 1 − t.
    pub fn pole_order_at_one(&self) -> u32 {
        self.denom_factors
            .iter()
            .find(|(r, _)| r.is_one())
            .map_or(0, |&(_, m)| m)
    }

    pub fn expand(&self, d: usize) -> Vec<CycNumber> {
        expand(self, d)
    }

    /// Factor the denominator of a parsed rational function.
    pub fn from_ratfunc(f: &RatFunc) -> Result<Self> {
        let deg = f.den.degree().unwrap_or(0);
        let fac = super::cyclotomic_factorization(&f.den, super::default_order_bound(deg, None));
        match fac {
            super::Factorization::Roots { roots, .. } => Ok(Self::new(f.num.clone(), roots)),
            super::Factorization::Failure { residual } => Err(Error::NonUnityRoot {
                residual: residual.to_string(),
            }),
        }
    }

    /// Parseable expression form, e.g. `1/((1 - t)^2*(1 + t))`.
    pub fn to_expression(&self) -> String {
        let den: Vec<String> = self.denom_factors.iter().map(|(r, m)| factor_str(r, *m)).collect();
        if den.is_empty() {
            return format!("{}", self.numerator);
        }
        format!("({})/({})", self.numerator, den.join("*"))
    }
}

fn factor_str(r: &RootOfUnity, m: u32) -> String {
    let base = match (r.order, r.exponent) {
        (1, _) => "(1 - t)".to_string(),
        (2, _) => "(1 + t)".to_string(),
        _ => format!("(1 - {}*t)", paren(&r.to_cyc())),
    };
    if m == 1 {
        base
    } else {
        format!("{base}^{m}")
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self.denom_factors.iter().map(|(r, m)| factor_str(r, *m)).collect();
        write!(f, "{} / prod[{}]", self.numerator, den.join(", "))
    }
}

/// Power-series coefficients 0..=d.
pub fn expand(f: &FactoredRational, d: usize) -> Vec<CycNumber> {
    let inv = series_inverse(f.denominator_poly().coeffs(), d).expect("denominator(0) = 1");
    series_mul(f.numerator.coeffs(), &inv, d)
}

/// Expansion in powers of (1 − t): coefficients of (1−t)^{-a}, (1−t)^{-a+1}, …
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentExpansion {
    pub leading_order: i64,
    pub coefficients: Vec<CycNumber>,
}

impl LaurentExpansion {
    /// Coefficient of (1−t)^{-j}; zero above the pole order.
    pub fn pole_coefficient(&self, j: i64) -> CycNumber {
        let idx = self.leading_order - j;
        if idx < 0 {
            return CycNumber::zero();
        }
        self.coefficients
            .get(idx as usize)
            .cloned()
            .expect("Laurent expansion computed with too few terms")
    }
}

pub fn laurent_at_one(f: &FactoredRational, k: usize) -> Result<LaurentExpansion> {
    assert!(k >= 1);
    let m1 = f.pole_order_at_one() as usize;
    let rest = FactoredRational::new(
        Poly::one(),
        f.denom_factors.iter().filter(|(r, _)| !r.is_one()).cloned().collect(),
    );
    let num_s = f.numerator.shift_one_minus();
    let den_s = rest.denominator_poly().shift_one_minus();
    let v = num_s
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(Error::NumeratorVanishesAtOne)?;
    if v > m1 {
        return Err(Error::NumeratorVanishesAtOne);
    }
    let num_tail = &num_s.coeffs()[v..];
    let inv = series_inverse(den_s.coeffs(), k - 1)?;
    let coefficients = series_mul(num_tail, &inv, k - 1);
    Ok(LaurentExpansion { leading_order: (m1 - v) as i64, coefficients })
}

/// e with series ≡ 1/e, deg e ≤ `denom_degree`, checked through `verify_to`.
pub fn reconstruct_rational(
    series: &[CycNumber],
    denom_degree: usize,
    verify_to: usize,
) -> Result<Poly> {
    if series.first().is_none_or(|c| !c.is_one()) {
        return Err(Error::Precondition("series must start with 1".into()));
    }
    if verify_to < denom_degree || series.len() <= verify_to {
        return Err(Error::Precondition(format!(
            "need coefficients through degree {verify_to} and verify_to >= {denom_degree}"
        )));
    }
    let e = Poly::new(series_inverse(series, denom_degree)?);
    let check = series_mul(e.coeffs(), series, verify_to);
    if let Some(degree) = check.iter().skip(1).position(|c| !c.is_zero()) {
        return Err(Error::ReconstructionMismatch { degree: degree + 1 });
    }
    Ok(e)
}
