//! Möbius, totient, cyclotomic polynomials and friends.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::CycNumber;

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius of 0");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient of 0");
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Product of the primes `<= n`.
pub fn primorial(n: u64) -> u64 {
    (2..=n)
        .filter(|&p| factorize(p).len() == 1 && factorize(p)[0].1 == 1)
        .product()
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Φ_n as integer coefficients, constant term first. Cached.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        num = div_monic(&num, &phi_d);
    }
    let out = Arc::new(num);
    cache().lock().unwrap().insert(n, out.clone());
    out
}

// Exact quotient of integer polynomials by a monic divisor.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem: Vec<i128> = num.iter().map(|&c| c as i128).collect();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = i64::try_from(c).expect("cyclotomic coefficient overflow");
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// Sum of the primitive w-th roots of unity, summed exactly.
pub fn primitive_root_sum(w: u64) -> CycNumber {
    (0..w)
        .filter(|&p| gcd(p, w) == 1)
        .fold(CycNumber::zero(), |acc, p| acc + CycNumber::zeta(w, p as i64))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumberTheory {
    pub w: u64,
    pub mobius: i64,
    pub totient: u64,
    pub cyclotomic_poly: Vec<i64>,
    pub primitive_root_sum: CycNumber,
}

pub fn number_theory(w: u64) -> NumberTheory {
    NumberTheory {
        w,
        mobius: mobius(w),
        totient: totient(w),
        cyclotomic_poly: cyclotomic_poly(w).as_ref().clone(),
        primitive_root_sum: primitive_root_sum(w),
    }
}
