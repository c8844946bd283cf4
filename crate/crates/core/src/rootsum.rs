//! Exact solutions of n = x_1 + … + x_k over roots of unity x_i ≠ 1.
//!
//! A solution splits into a core with no vanishing sub-sum and a vanishing
//! remainder. Cores are finite in number: by Mann's theorem every core element
//! has order dividing the product of the primes ≤ |core| + 1, and the Galois
//! average Σ (1 − μ(w_i)/φ(w_i)) = k − n restricts the orders further. The
//! remainder is built from cancelling pairs {ξ, −ξ} and triples ξ{1, ζ3, ζ3²},
//! which is complete as long as it has at most four elements; larger remainders
//! admit other minimal vanishing sums and are refused.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{cyclotomic_poly, divisors, gcd, mobius, primorial, totient, CycNumber, RootOfUnity};
use crate::error::{Error, Result};

/// Largest number of candidate assignments examined before giving up.
pub const DEFAULT_CANDIDATE_LIMIT: usize = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSumProblem {
    pub target: u32,
    pub count: u32,
    /// No x_i equals −1.
    pub no_minus_one: bool,
    /// No two x_i satisfy x_i + x_j = 0.
    pub no_cancelling_pair: bool,
}

impl RootSumProblem {
    pub fn new(target: u32, count: u32) -> Self {
        RootSumProblem { target, count, no_minus_one: false, no_cancelling_pair: false }
    }

    pub fn excluding(mut self, minus_one: bool, cancelling_pair: bool) -> Self {
        self.no_minus_one = minus_one;
        self.no_cancelling_pair = cancelling_pair;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Template {
    /// {ξ, −ξ}.
    CancellingPair,
    /// {ξ, ξζ3, ξζ3²}.
    CubeTriple,
}

impl Template {
    pub fn size(&self) -> usize {
        match self {
            Template::CancellingPair => 2,
            Template::CubeTriple => 3,
        }
    }

    /// ξ^power is the invariant of a block: it does not depend on which element is called ξ.
    fn power(&self) -> u32 {
        self.size() as u32
    }

    fn elements(&self) -> Vec<RootOfUnity> {
        match self {
            Template::CancellingPair => vec![RootOfUnity::ONE, RootOfUnity::MINUS_ONE],
            Template::CubeTriple => (0..3).map(|j| RootOfUnity::new(3, j)).collect(),
        }
    }
}

/// ξ_symbol^power ≠ value, or (ξ_symbol/ξ_other)^power ≠ value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Exclusion {
    pub symbol: usize,
    pub ratio_with: Option<usize>,
    pub power: u32,
    pub value: RootOfUnity,
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ratio_with {
            None => write!(f, "xi{}^{} != {}", self.symbol + 1, self.power, self.value),
            Some(o) => write!(f, "(xi{}/xi{})^{} != {}", self.symbol + 1, o + 1, self.power, self.value),
        }
    }
}

/// A concrete core plus parametric blocks, one free root-of-unity symbol per block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolutionFamily {
    /// Sorted by (order, exponent).
    pub core: Vec<RootOfUnity>,
    /// Block b uses symbol xi_{b+1}.
    pub blocks: Vec<Template>,
    pub exclusions: Vec<Exclusion>,
}

impl SolutionFamily {
    pub fn is_concrete(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn provenance(&self) -> &'static str {
        if self.is_concrete() {
            "sporadic"
        } else {
            "parametric"
        }
    }

    pub fn size(&self) -> usize {
        self.core.len() + self.blocks.iter().map(|b| b.size()).sum::<usize>()
    }

    /// Whether `roots` (any order) is a member of the family.
    pub fn instantiates(&self, roots: &[RootOfUnity]) -> bool {
        if roots.len() != self.size() {
            return false;
        }
        let mut rest: Vec<RootOfUnity> = roots.to_vec();
        for c in &self.core {
            match rest.iter().position(|r| r == c) {
                Some(i) => {
                    rest.swap_remove(i);
                }
                None => return false,
            }
        }
        let mut chosen = Vec::new();
        self.assign(&mut rest, 0, &mut chosen)
    }

    fn assign(&self, rest: &mut Vec<RootOfUnity>, b: usize, chosen: &mut Vec<RootOfUnity>) -> bool {
        if b == self.blocks.len() {
            return self.exclusions.iter().all(|e| {
                let x = chosen[e.symbol];
                let v = match e.ratio_with {
                    None => x,
                    Some(o) => x.mul(chosen[o].inverse()),
                };
                v.pow(e.power as i64) != e.value
            });
        }
        let t = self.blocks[b];
        let candidates: BTreeSet<RootOfUnity> = rest.iter().copied().collect();
        for xi in candidates {
            let members: Vec<RootOfUnity> = t.elements().iter().map(|e| xi.mul(*e)).collect();
            let mut trial = rest.clone();
            let ok = members.iter().all(|m| match trial.iter().position(|r| r == m) {
                Some(i) => {
                    trial.swap_remove(i);
                    true
                }
                None => false,
            });
            if ok {
                chosen.push(xi);
                let mut next = trial;
                if self.assign(&mut next, b + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

impl fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.core.iter().map(|r| r.to_string()).collect();
        for (b, t) in self.blocks.iter().enumerate() {
            parts.push(match t {
                Template::CancellingPair => format!("xi{0} - xi{0}", b + 1),
                Template::CubeTriple => format!("xi{}*(1 + zeta(3,1) + zeta(3,2))", b + 1),
            });
        }
        write!(f, "{}", parts.join(" + "))?;
        if !self.exclusions.is_empty() {
            let ex: Vec<String> = self.exclusions.iter().map(|e| e.to_string()).collect();
            write!(f, "  [{}]", ex.join(", "))?;
        }
        Ok(())
    }
}

/// 1 − μ(w)/φ(w), the Galois average of a primitive w-th root subtracted from 1.
pub fn averaging_term(w: u64) -> Ratio<i64> {
    Ratio::from_integer(1) - Ratio::new(mobius(w), totient(w) as i64)
}

/// Powers of ζ_M as integer coordinates in the power basis modulo Φ_M.
struct PowerTable {
    m: u64,
    phi: usize,
    powers: Vec<Vec<i64>>,
}

impl PowerTable {
    fn new(m: u64) -> Self {
        let cp = cyclotomic_poly(m);
        let phi = cp.len() - 1;
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        let mut powers = Vec::with_capacity(m as usize);
        for _ in 0..m {
            powers.push(cur.clone());
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1] - top * cp[i];
            }
            cur[0] = -top * cp[0];
        }
        PowerTable { m, phi, powers }
    }

    fn of(&self, r: RootOfUnity) -> &[i64] {
        &self.powers[(r.exponent * (self.m / r.order)) as usize]
    }
}

/// Exponent assignments for a run of positions, nondecreasing within each order.
fn half_assignments(orders: &[u64], units: &dyn Fn(u64) -> Vec<u64>) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for (p, &w) in orders.iter().enumerate() {
        let us = units(w);
        let mut next = Vec::new();
        for a in &out {
            let floor = if p > 0 && orders[p - 1] == w { a[p - 1] } else { 0 };
            for &e in us.iter().filter(|&&e| e >= floor) {
                let mut b = a.clone();
                b.push(e);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

struct CoreSearch<'a> {
    target: i64,
    table: &'a PowerTable,
    limit: usize,
    visited: usize,
    out: Vec<Vec<RootOfUnity>>,
}

impl CoreSearch<'_> {
    fn sum_of(&self, orders: &[u64], exps: &[u64]) -> Vec<i64> {
        let mut total = vec![0i64; self.table.phi];
        for (&w, &e) in orders.iter().zip(exps) {
            for (t, x) in total.iter_mut().zip(self.table.of(RootOfUnity { order: w, exponent: e })) {
                *t += x;
            }
        }
        total
    }

    fn charge(&mut self, n: usize) -> Result<()> {
        self.visited += n;
        if self.visited > self.limit {
            return Err(Error::CandidateSetOverflow { size: self.visited, limit: self.limit });
        }
        Ok(())
    }

    /// Splits the positions in two halves and matches half-sums exactly.
    fn search(&mut self, orders: &[u64]) -> Result<()> {
        let units = |w: u64| (1..w).filter(|&e| gcd(e, w) == 1).collect::<Vec<u64>>();
        let mid = orders.len() / 2;
        let (lo, hi) = orders.split_at(mid);
        let left = half_assignments(lo, &units);
        self.charge(left.len())?;
        let right = half_assignments(hi, &units);
        self.charge(right.len())?;
        let mut table: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        for (i, a) in left.iter().enumerate() {
            table.entry(self.sum_of(lo, a)).or_default().push(i);
        }
        let straddle = mid > 0 && mid < orders.len() && orders[mid - 1] == orders[mid];
        for b in &right {
            let mut want = self.sum_of(hi, b);
            for x in want.iter_mut() {
                *x = -*x;
            }
            want[0] += self.target;
            let Some(bucket) = table.get(&want) else { continue };
            for &i in bucket {
                let a = &left[i];
                if straddle && a[mid - 1] > b[0] {
                    continue;
                }
                let roots: Vec<RootOfUnity> = orders
                    .iter()
                    .zip(a.iter().chain(b.iter()))
                    .map(|(&w, &e)| RootOfUnity { order: w, exponent: e })
                    .collect();
                self.keep_if_minimal(roots);
            }
        }
        Ok(())
    }

    fn keep_if_minimal(&mut self, roots: Vec<RootOfUnity>) {
        let phi = self.table.phi;
        let vecs: Vec<&[i64]> = roots.iter().map(|r| self.table.of(*r)).collect();
        let s = roots.len();
        for mask in 1u32..(1 << s) - 1 {
            let mut sub = vec![0i64; phi];
            for (i, v) in vecs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    for (t, x) in sub.iter_mut().zip(v.iter()) {
                        *t += x;
                    }
                }
            }
            if sub.iter().all(|&x| x == 0) {
                return;
            }
        }
        let mut sorted = roots;
        sorted.sort();
        self.out.push(sorted);
    }
}

/// Multisets of s roots ≠ 1 summing to n with no vanishing sub-multiset.
fn cores(n: u32, s: usize, no_minus_one: bool, limit: usize) -> Result<Vec<Vec<RootOfUnity>>> {
    if s == 0 {
        return Ok(if n == 0 { vec![vec![]] } else { vec![] });
    }
    // A nonempty core cannot vanish, and each averaging term is at least 1/2.
    if n == 0 || s < 2 * n as usize {
        return Ok(vec![]);
    }
    let m = primorial(s as u64 + 1);
    let orders: Vec<(u64, Ratio<i64>)> = divisors(m)
        .into_iter()
        .filter(|&w| w > 1 && !(no_minus_one && w == 2))
        .map(|w| (w, averaging_term(w)))
        .collect();
    let lo = orders.iter().map(|o| o.1).min().expect("nonempty");
    let hi = orders.iter().map(|o| o.1).max().expect("nonempty");
    let budget = Ratio::from_integer(s as i64 - n as i64);
    let mut lists = Vec::new();
    let mut cur = Vec::new();
    order_lists(&orders, 0, s, Ratio::from_integer(0), budget, lo, hi, &mut cur, &mut lists);

    let table = PowerTable::new(m);
    let mut search = CoreSearch { target: n as i64, table: &table, limit, visited: 0, out: Vec::new() };
    for list in lists {
        search.search(&list)?;
    }
    search.out.sort();
    search.out.dedup();
    Ok(search.out)
}

#[allow(clippy::too_many_arguments)]
fn order_lists(
    orders: &[(u64, Ratio<i64>)],
    start: usize,
    left: usize,
    sum: Ratio<i64>,
    budget: Ratio<i64>,
    lo: Ratio<i64>,
    hi: Ratio<i64>,
    cur: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if left == 0 {
        if sum == budget {
            out.push(cur.clone());
        }
        return;
    }
    let k = Ratio::from_integer(left as i64);
    if sum + lo * k > budget || sum + hi * k < budget {
        return;
    }
    for i in start..orders.len() {
        let (w, f) = orders[i];
        cur.push(w);
        order_lists(orders, i, left - 1, sum + f, budget, lo, hi, cur, out);
        cur.pop();
    }
}

fn exclusions(core: &[RootOfUnity], blocks: &[Template], p: &RootSumProblem) -> Vec<Exclusion> {
    let mut out = BTreeSet::new();
    for (b, t) in blocks.iter().enumerate() {
        let power = t.power();
        let ex = |value| Exclusion { symbol: b, ratio_with: None, power, value };
        // No element equal to 1 (for a pair this also rules out −1).
        out.insert(ex(RootOfUnity::ONE));
        if p.no_minus_one {
            out.insert(ex(RootOfUnity::MINUS_ONE.pow(power as i64)));
        }
        if p.no_cancelling_pair {
            for c in core {
                out.insert(ex(c.neg().pow(power as i64)));
            }
            for o in 0..b {
                out.insert(Exclusion { symbol: b, ratio_with: Some(o), power, value: RootOfUnity::MINUS_ONE });
            }
        }
    }
    out.into_iter().collect()
}

/// All solution families of the problem.
pub fn solve(problem: &RootSumProblem) -> Result<Vec<SolutionFamily>> {
    solve_with_limit(problem, DEFAULT_CANDIDATE_LIMIT)
}

pub fn solve_with_limit(problem: &RootSumProblem, limit: usize) -> Result<Vec<SolutionFamily>> {
    let n = problem.target;
    let k = problem.count as usize;
    let mut out = BTreeSet::new();
    for s in 0..=k {
        let found = cores(n, s, problem.no_minus_one, limit)?;
        if found.is_empty() {
            continue;
        }
        let v = k - s;
        if v >= 5 {
            return Err(Error::UnsupportedTemplate { size: v });
        }
        for q in 0..=v / 3 {
            if !(v - 3 * q).is_multiple_of(2) {
                continue;
            }
            let pairs = (v - 3 * q) / 2;
            if pairs > 0 && problem.no_cancelling_pair {
                continue;
            }
            let mut blocks = vec![Template::CancellingPair; pairs];
            blocks.extend(std::iter::repeat_n(Template::CubeTriple, q));
            for core in &found {
                out.insert(SolutionFamily {
                    core: core.clone(),
                    exclusions: exclusions(core, &blocks, problem),
                    blocks: blocks.clone(),
                });
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Exact check that every member of the family solves the problem.
///
/// The core is summed in ℚ(ζ_N); each block sums to zero by 1 + (−1) = 0 or
/// 1 + ζ3 + ζ3² = 0, independently of its symbol.
pub fn verify_family(family: &SolutionFamily, problem: &RootSumProblem) -> bool {
    if family.size() != problem.count as usize || family.core.iter().any(|r| r.is_one()) {
        return false;
    }
    let core: CycNumber = family.core.iter().map(|r| r.to_cyc()).sum();
    let blocks_vanish = family
        .blocks
        .iter()
        .all(|t| t.elements().iter().map(|r| r.to_cyc()).sum::<CycNumber>().is_zero());
    let exclusions_hold = !problem.no_minus_one || !family.core.contains(&RootOfUnity::MINUS_ONE);
    core == CycNumber::from_integer(problem.target as i64) && blocks_vanish && exclusions_hold
}
