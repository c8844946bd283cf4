use serde::{Deserialize, Serialize};

use super::Poly;
use crate::cyclotomic::{cyclotomic_poly, gcd, lcm, totient, CycNumber, RootOfUnity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PalindromeKind {
    Palindrome,
    SkewPalindrome,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalindromeReport {
    pub kind: PalindromeKind,
    pub value_at_one: CycNumber,
    pub derivative_at_one: CycNumber,
    /// For palindromes: whether e'(1) = n·e(1)/2.
    pub derivative_identity: Option<bool>,
}

pub fn palindrome_check(e: &Poly) -> PalindromeReport {
    let n = e.degree().unwrap_or(0);
    let c = e.coeffs();
    let pal = (0..=n).all(|i| e.coeff(n - i) == c.get(i).cloned().unwrap_or_default());
    let skew = (0..=n).all(|i| e.coeff(n - i) == -c.get(i).cloned().unwrap_or_default());
    let kind = if pal {
        PalindromeKind::Palindrome
    } else if skew {
        PalindromeKind::SkewPalindrome
    } else {
        PalindromeKind::Neither
    };
    let one = CycNumber::one();
    let value_at_one = e.eval(&one);
    let derivative_at_one = e.derivative().eval(&one);
    let derivative_identity = pal.then(|| {
        derivative_at_one.scale(&crate::cyclotomic::rat(2, 1))
            == value_at_one.scale(&crate::cyclotomic::rat(n as i64, 1))
    });
    PalindromeReport { kind, value_at_one, derivative_at_one, derivative_identity }
}

/// Result of extracting root-of-unity roots from e(t) = ∏(1 − λt).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Factorization {
    Roots {
        /// The λ with multiplicities, sorted by (order, exponent).
        roots: Vec<(RootOfUnity, u32)>,
        /// Φ_d factors of the norm of e over ℚ (of e itself when e is rational).
        cyclotomic_factors: Vec<(u64, u32)>,
    },
    Failure {
        residual: Poly,
    },
}

impl Factorization {
    pub fn roots(&self) -> Option<&[(RootOfUnity, u32)]> {
        match self {
            Factorization::Roots { roots, .. } => Some(roots),
            Factorization::Failure { .. } => None,
        }
    }

    /// Multiplicity of λ = 1.
    pub fn multiplicity_of_one(&self) -> Option<u32> {
        self.roots()
            .map(|r| r.iter().find(|(x, _)| x.is_one()).map_or(0, |&(_, m)| m))
    }
}

/// 2 · deg e · (automorphism order, or 60 when unknown).
pub fn default_order_bound(degree: usize, order: Option<u64>) -> u64 {
    2 * degree.max(1) as u64 * order.unwrap_or(60)
}

fn phi_poly(d: u64) -> Poly {
    Poly::from_ints(&cyclotomic_poly(d))
}

/// Splits e(t) with e(0) = 1 into linear factors 1 − λt over roots of unity.
///
/// The roots are located through the norm of e down to ℚ, whose reversal must be
/// a product of cyclotomic polynomials Φ_d with d ≤ `order_bound`.
pub fn cyclotomic_factorization(e: &Poly, order_bound: u64) -> Factorization {
    assert!(e.coeff(0).is_one(), "cyclotomic_factorization needs e(0) = 1");
    let failure = |residual: Poly| Factorization::Failure { residual };
    let minimized: Vec<CycNumber> = e.coeffs().iter().map(|c| c.minimize()).collect();
    let n = minimized.iter().fold(1, |acc, c| lcm(acc, c.conductor()));
    let e = Poly::new(minimized);

    let mut norm = Poly::one();
    for p in (1..n.max(2)).filter(|&p| gcd(p, n) == 1) {
        norm = &norm * &e.galois_map(p as i64).expect("p is a unit");
    }
    let mut rev = norm.reversed();
    let mut cyclotomic_factors = Vec::new();
    for d in 1..=order_bound {
        let deg = rev.degree().unwrap_or(0) as u64;
        if deg == 0 {
            break;
        }
        if totient(d) > deg {
            continue;
        }
        let phi = phi_poly(d);
        let mut m = 0;
        while let Ok(q) = rev.div_exact(&phi) {
            rev = q;
            m += 1;
        }
        if m > 0 {
            cyclotomic_factors.push((d, m));
        }
    }
    if rev.degree().unwrap_or(0) > 0 {
        return failure(e);
    }

    let mut rest = e;
    let mut roots = Vec::new();
    for &(d, _) in &cyclotomic_factors {
        for k in (0..d).filter(|&k| gcd(k, d) == 1) {
            let r = RootOfUnity::new(d, k as i64);
            let lambda = r.to_cyc();
            let mut m = 0;
            while let Some(q) = rest.div_linear(&lambda) {
                rest = q;
                m += 1;
            }
            if m > 0 {
                roots.push((r, m));
            }
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        return failure(rest);
    }
    roots.sort();
    Factorization::Roots { roots, cyclotomic_factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::FactoredRational;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn palindrome_examples() {
        let r = palindrome_check(&Poly::from_ints(&[1, 1]));
        assert_eq!(r.kind, PalindromeKind::Palindrome);
        assert_eq!(r.derivative_identity, Some(true));
        let r = palindrome_check(&Poly::from_ints(&[1, -2, 1]));
        assert_eq!(r.kind, PalindromeKind::Palindrome);
        assert_eq!(r.derivative_identity, Some(true));
        let r = palindrome_check(&Poly::from_ints(&[1, 0, -1]));
        assert_eq!(r.kind, PalindromeKind::SkewPalindrome);
        assert!(r.value_at_one.is_zero());
        assert_eq!(palindrome_check(&Poly::from_ints(&[1, 2])).kind, PalindromeKind::Neither);
    }

    #[test]
    fn factorization_examples() {
        let e = &Poly::from_ints(&[1, -1]).pow(3) * &Poly::from_ints(&[1, 1]);
        let f = cyclotomic_factorization(&e, 60);
        assert_eq!(
            f.roots().unwrap(),
            &[(RootOfUnity::ONE, 3), (RootOfUnity::MINUS_ONE, 1)]
        );
        let f = cyclotomic_factorization(&Poly::from_ints(&[1, -1, 1]), 60);
        assert_eq!(
            f.roots().unwrap(),
            &[(RootOfUnity::new(6, 1), 1), (RootOfUnity::new(6, 5), 1)]
        );
        assert!(matches!(
            cyclotomic_factorization(&Poly::from_ints(&[1, -2]), 60),
            Factorization::Failure { .. }
        ));
        // Coefficients outside ℚ: (1 - it)(1 - ζ6 t).
        let e = &Poly::linear_factor(&CycNumber::i()) * &Poly::linear_factor(&CycNumber::zeta(6, 1));
        let f = cyclotomic_factorization(&e, 60);
        assert_eq!(
            f.roots().unwrap(),
            &[(RootOfUnity::new(4, 1), 1), (RootOfUnity::new(6, 1), 1)]
        );
    }

    #[test]
    fn derivative_identity_on_random_palindromes() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(0..=10usize);
            let mut c: Vec<i64> = (0..=n).map(|_| rng.gen_range(-9..=9)).collect();
            c[0] = 1;
            for i in 0..=n {
                c[n - i] = c[i];
            }
            let r = palindrome_check(&Poly::from_ints(&c));
            assert_eq!(r.kind, PalindromeKind::Palindrome);
            assert_eq!(r.derivative_identity, Some(true), "{c:?}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn products_of_cyclotomics_are_palindromic_or_skew(ds in prop::collection::vec(1u64..=30, 1..5)) {
            let e = ds.iter().fold(Poly::one(), |acc, &d| {
                let p = phi_poly(d);
                // Normalise to constant term 1 (Φ_1 = t - 1).
                let p = p.scale(&p.coeff(0).inverse().unwrap());
                &acc * &p
            });
            let r = palindrome_check(&e);
            prop_assert_ne!(r.kind, PalindromeKind::Neither);
            let f = cyclotomic_factorization(&e, 60);
            let roots = f.roots().unwrap();
            prop_assert_eq!(FactoredRational::reciprocal_of(roots).denominator_poly(), e);
        }
    }
}
