//! Helpers shared by the integration targets.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use ginv_core::cyclotomic::CycNumber;
use ginv_core::RootOfUnity;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

/// Random linear functional on ℚ(ζ_N), applied to each ζ_N^e via exact coordinates.
fn root_keys(n: u64, rng: &mut StdRng) -> Vec<u64> {
    let coords: Vec<Vec<i64>> = (0..n)
        .map(|e| {
            CycNumber::zeta(n, e as i64)
                .lift(n)
                .coeffs()
                .iter()
                .map(|c| i64::try_from(c.to_integer()).expect("small coordinate"))
                .collect()
        })
        .collect();
    let width = coords.iter().map(|c| c.len()).max().unwrap_or(1);
    let weights: Vec<u64> = (0..width).map(|_| rng.gen_range(1..P)).collect();
    coords
        .iter()
        .map(|c| {
            c.iter().zip(&weights).fold(0u64, |acc, (&x, &w)| {
                let term = mulmod(x.unsigned_abs() % P, w);
                if x >= 0 {
                    (acc + term) % P
                } else {
                    (acc + P - term) % P
                }
            })
        })
        .collect()
}

/// Nondecreasing exponent tuples of length `len` over 1..n.
fn multisets(n: u8, len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(n: u8, len: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for e in start..n {
            cur.push(e);
            rec(n, len, e, cur, out);
            cur.pop();
        }
    }
    rec(n, len, 1, &mut cur, &mut out);
    out
}

/// Every multiset of k roots ≠ 1 of order dividing some N ≤ `max_conductor`
/// whose sum is one of `targets`, found by hashing half-sums and confirmed exactly.
pub fn brute_force(k: usize, targets: &[u32], max_conductor: u64) -> HashMap<u32, BTreeSet<Vec<RootOfUnity>>> {
    let conductors: Vec<u64> = (max_conductor / 2 + 1..=max_conductor).collect();
    let found: Vec<(u32, Vec<RootOfUnity>)> = conductors
        .par_iter()
        .flat_map_iter(|&n| {
            let mut rng = StdRng::seed_from_u64(n);
            let keys = root_keys(n, &mut rng);
            let key_of = |m: &[u8]| m.iter().fold(0u64, |a, &e| (a + keys[e as usize]) % P);
            let a = k / 2;
            let left = multisets(n as u8, a);
            let right = multisets(n as u8, k - a);
            let mut table: HashMap<u64, Vec<usize>> = HashMap::new();
            for (i, r) in right.iter().enumerate() {
                table.entry(key_of(r)).or_default().push(i);
            }
            let mut hits = Vec::new();
            for l in &left {
                let kl = key_of(l);
                let floor = l.last().copied().unwrap_or(0);
                for &t in targets {
                    let want = (mulmod(t as u64, keys[0]) + P - kl) % P;
                    let Some(bucket) = table.get(&want) else { continue };
                    for &i in bucket {
                        let r = &right[i];
                        if r[0] < floor {
                            continue;
                        }
                        let roots: Vec<RootOfUnity> =
                            l.iter().chain(r.iter()).map(|&e| RootOfUnity::new(n, e as i64)).collect();
                        let sum: CycNumber = roots.iter().map(|x| x.to_cyc()).sum();
                        if sum == CycNumber::from_integer(t as i64) {
                            let mut sorted = roots;
                            sorted.sort();
                            hits.push((t, sorted));
                        }
                    }
                }
            }
            hits
        })
        .collect();
    let mut out: HashMap<u32, BTreeSet<Vec<RootOfUnity>>> = targets.iter().map(|&t| (t, BTreeSet::new())).collect();
    for (t, m) in found {
        out.get_mut(&t).expect("requested target").insert(m);
    }
    out
}

pub fn has_minus_one(m: &[RootOfUnity]) -> bool {
    m.contains(&RootOfUnity::MINUS_ONE)
}

pub fn has_cancelling_pair(m: &[RootOfUnity]) -> bool {
    m.iter().any(|x| m.contains(&x.neg()))
}
