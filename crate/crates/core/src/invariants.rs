//! Molien series, isotypic components, fixed-ring Hilbert series and the
//! regularity gate for finite groups of graded automorphisms.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::automorphism::{FiniteGroup, GradedAutomorphism, TraceFunction};
use crate::cyclotomic::{rat, CycNumber, Rational};
use crate::error::{Error, Result};
use crate::linalg::{axpy, Echelon, SparseVec};
use crate::presentation::AlgebraProfile;
use crate::reflection::{ClassificationReport, Kind};
use crate::series::{laurent_at_one, reconstruct_rational, FactoredRational, Poly};

/// Trace series of every group element, in group order.
pub fn group_traces(alg: &Algebra, group: &FiniteGroup) -> Vec<Vec<CycNumber>> {
    group.elements.par_iter().map(|g| alg.trace(g)).collect()
}

/// Average of trace series.
pub fn molien_from_traces(traces: &[Vec<CycNumber>]) -> Vec<CycNumber> {
    let inv = CycNumber::from_rational(rat(1, traces.len() as i64));
    let len = traces[0].len();
    (0..len)
        .map(|i| &traces.iter().map(|t| t[i].clone()).sum::<CycNumber>() * &inv)
        .collect()
}

/// H_{A^G}(t) = (1/|G|) Σ_g Tr_A(g, t), through the algebra's cutoff.
pub fn molien(alg: &Algebra, group: &FiniteGroup) -> Vec<CycNumber> {
    molien_from_traces(&group_traces(alg, group))
}

/// dim (A_i)^G as the rank of Σ_g g acting on the normal words of degree i.
///
/// Independent of the trace computation: only the graded matrices are shared.
pub fn invariant_dims_oracle(alg: &Algebra, group: &FiniteGroup) -> Vec<usize> {
    let mats: Vec<_> = group.elements.par_iter().map(|g| g.graded_matrices(&alg.rs)).collect();
    let one = CycNumber::one();
    (0..=alg.cutoff())
        .into_par_iter()
        .map(|d| {
            let mut e = Echelon::new();
            for col in 0..alg.rs.dim(d) {
                let mut acc = SparseVec::new();
                for m in &mats {
                    axpy(&mut acc, &one, &m[d][col]);
                }
                e.insert(&acc);
            }
            e.rank()
        })
        .collect()
}

/// Series of the ζ_m^k-eigenspaces of g, for k = 0..m, where m is the order of g.
///
/// Component k is (1/m) Σ_j ζ_m^{−kj} Tr(g^j, t); the components sum to the Hilbert series.
pub fn isotypic_series(alg: &Algebra, g: &GradedAutomorphism, m: u64) -> Vec<Vec<CycNumber>> {
    let traces: Vec<Vec<CycNumber>> = (0..m).into_par_iter().map(|j| alg.trace(&g.pow(j))).collect();
    let inv = CycNumber::from_rational(rat(1, m as i64));
    (0..m)
        .map(|k| {
            (0..=alg.cutoff())
                .map(|i| {
                    let s: CycNumber = (0..m)
                        .map(|j| &CycNumber::zeta(m, -((k * j) as i64)) * &traces[j as usize][i])
                        .sum();
                    &s * &inv
                })
                .collect()
        })
        .collect()
}

/// Shape of the fixed-ring Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum FixedRing {
    /// H = 1/e(t) = 1/((1−t)^n q(t)), verified through the cutoff.
    Reconstructed {
        euler: Poly,
        q: Poly,
        q_at_one: CycNumber,
        deg_q: usize,
        /// q(1) = |G|.
        q_at_one_is_order: bool,
        /// deg q = number of quasi-reflections.
        deg_q_is_count: bool,
    },
    /// 1/e(t) verified, but (1−t)^n does not divide e.
    PoleOrderMismatch { euler: Poly },
    /// No 1/e with deg e ≤ `max_degree_tried` matches: the series is not of
    /// finite-global-dimension form in that range, and nothing is claimed beyond it.
    NotInverseOfPolynomial { max_degree_tried: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MolienReport {
    pub series: Vec<CycNumber>,
    pub group_order: usize,
    pub fixed_ring: FixedRing,
    pub quasi_count_direct: usize,
    /// Coefficient of (1−t)^{−(n−1)} in the Laurent expansion of the Molien series.
    #[serde(with = "crate::cyclotomic::rational_str::option")]
    pub quasi_count_laurent: Option<Rational>,
    /// r/(2|G|).
    #[serde(with = "crate::cyclotomic::rational_str")]
    pub laurent_expected: Rational,
}

impl MolienReport {
    pub fn laurent_identity_holds(&self) -> Option<bool> {
        self.quasi_count_laurent.as_ref().map(|c| *c == self.laurent_expected)
    }
}

/// Looks for H_{A^G} = 1/e(t) with deg e from deg e_A up to cutoff/2.
pub fn fixed_ring_analysis(
    series: &[CycNumber],
    profile: &AlgebraProfile,
    group_order: usize,
    quasi_count_direct: usize,
) -> FixedRing {
    let cutoff = series.len() - 1;
    let max = cutoff / 2;
    let Some(euler) = (profile.euler_degree()..=max)
        .find_map(|k| reconstruct_rational(series, k, cutoff).ok())
    else {
        return FixedRing::NotInverseOfPolynomial { max_degree_tried: max };
    };
    let power = Poly::from_ints(&[1, -1]).pow(profile.gkdim);
    match euler.div_rem(&power) {
        Ok((q, r)) if r.is_zero() => {
            let q_at_one = q.eval(&CycNumber::one());
            let deg_q = q.degree().unwrap_or(0);
            FixedRing::Reconstructed {
                q_at_one_is_order: q_at_one == CycNumber::from_integer(group_order as i64),
                deg_q_is_count: deg_q == quasi_count_direct,
                euler,
                q,
                q_at_one,
                deg_q,
            }
        }
        _ => FixedRing::PoleOrderMismatch { euler },
    }
}

/// (1/|G|) Σ_g [coefficient of (1−t)^{−(n−1)} in 1/e_g], for a quantum polynomial ring.
pub fn quasi_count_laurent(traces: &[TraceFunction], profile: &AlgebraProfile) -> Result<Rational> {
    if !profile.is_quantum_polynomial() {
        return Err(Error::Precondition(
            "the Laurent count needs a quantum polynomial ring profile".into(),
        ));
    }
    let n = profile.gkdim as i64;
    let mut total = CycNumber::zero();
    for tf in traces {
        let roots = tf
            .roots
            .as_ref()
            .ok_or_else(|| Error::Precondition("Euler polynomial without root-of-unity roots".into()))?;
        let lx = laurent_at_one(&FactoredRational::reciprocal_of(roots), 2)?;
        total += &lx.pole_coefficient(n - 1);
    }
    let avg = &total * &CycNumber::from_rational(rat(1, traces.len() as i64));
    avg.as_rational()
        .ok_or_else(|| Error::Precondition(format!("group average {avg} is not rational")))
}

/// Molien series, fixed-ring analysis and both quasi-reflection counts.
pub fn molien_report(
    alg: &Algebra,
    group: &FiniteGroup,
    classes: &[ClassificationReport],
) -> Result<MolienReport> {
    let traces = group_traces(alg, group);
    let series = molien_from_traces(&traces);
    let r = classes.iter().filter(|c| c.is_quasi_reflection()).count();
    let order = group.order();
    let fixed_ring = fixed_ring_analysis(&series, &alg.profile, order, r);
    let quasi_count_laurent = if alg.profile.is_quantum_polynomial() {
        let tfs = traces
            .into_iter()
            .zip(classes)
            .map(|(t, c)| TraceFunction::compute(&alg.profile, t, c.order.finite()))
            .collect::<Result<Vec<_>>>()?;
        Some(quasi_count_laurent(&tfs, &alg.profile)?)
    } else {
        None
    };
    Ok(MolienReport {
        series,
        group_order: order,
        fixed_ring,
        quasi_count_direct: r,
        quasi_count_laurent,
        laurent_expected: rat(r as i64, 2 * order as i64),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GateOutcome {
    /// A^G is regular.
    Regular,
    /// A^G has infinite global dimension, so A^G is not isomorphic to A.
    InfiniteGlobalDimension,
    /// Every necessary condition checked here holds; no regularity claim is made.
    NecessaryConditionMet,
}

/// Which rule produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GateRule {
    TrivialGroup,
    /// A finite group with a regular fixed ring contains a quasi-reflection.
    NoQuasiReflection,
    /// The fixed ring of a single quasi-reflection of finite order is regular.
    CyclicQuasiReflectionGenerator,
    /// For a cyclic group of prime-power order, a regular fixed ring forces the generator
    /// to be a quasi-reflection.
    CyclicPrimePowerNonQuasiReflection,
    /// A regular fixed ring with |G| = 4m, m > 1 and no reflections needs at least four
    /// mystic reflections.
    TooFewMysticReflections,
    NecessaryCondition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateVerdict {
    pub outcome: GateOutcome,
    pub rule: GateRule,
    pub group_order: usize,
    pub quasi_reflections: Vec<String>,
    pub notes: Vec<String>,
}

impl GateVerdict {
    pub fn summary(&self) -> &'static str {
        match self.outcome {
            GateOutcome::Regular => "A^G is regular",
            GateOutcome::InfiniteGlobalDimension => "A^G has infinite global dimension; A^G is not isomorphic to A",
            GateOutcome::NecessaryConditionMet => "necessary condition met",
        }
    }
}

fn is_prime_power(mut n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|p| n.is_multiple_of(*p)).expect("n >= 2");
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Logical verdict on the fixed ring from the classification of every element.
///
/// Results that hold for quantum polynomial rings only are applied when the profile is one.
pub fn regularity_gate(
    profile: &AlgebraProfile,
    classes: &[ClassificationReport],
) -> GateVerdict {
    let order = classes.len();
    let quasi: Vec<&ClassificationReport> = classes.iter().filter(|c| c.is_quasi_reflection()).collect();
    let names = quasi.iter().map(|c| c.name.clone()).collect();
    let verdict = |outcome, rule, notes| GateVerdict {
        outcome,
        rule,
        group_order: order,
        quasi_reflections: names,
        notes,
    };
    if order == 1 {
        return verdict(GateOutcome::Regular, GateRule::TrivialGroup, vec!["A^G = A".into()]);
    }
    if quasi.is_empty() {
        return verdict(GateOutcome::InfiniteGlobalDimension, GateRule::NoQuasiReflection, vec![]);
    }
    let qp = profile.is_quantum_polynomial();
    let generators: Vec<&ClassificationReport> =
        classes.iter().filter(|c| c.order.finite() == Some(order as u64)).collect();
    if qp && !generators.is_empty() {
        if generators.iter().any(|g| g.is_quasi_reflection()) {
            return verdict(GateOutcome::Regular, GateRule::CyclicQuasiReflectionGenerator, vec![]);
        }
        if is_prime_power(order as u64) {
            return verdict(
                GateOutcome::InfiniteGlobalDimension,
                GateRule::CyclicPrimePowerNonQuasiReflection,
                vec![],
            );
        }
    }
    let mut notes = Vec::new();
    if qp && profile.gkdim > 1 {
        let reflections = quasi.iter().filter(|c| c.kind == Kind::Reflection).count();
        let mystic = quasi.iter().filter(|c| c.kind == Kind::MysticReflection).count();
        if order.is_multiple_of(4) && order > 4 && reflections == 0 && mystic < 4 {
            return verdict(
                GateOutcome::InfiniteGlobalDimension,
                GateRule::TooFewMysticReflections,
                vec![format!("{mystic} mystic reflections and no reflections in a group of order {order}")],
            );
        }
        if order % 2 == 1 {
            notes.push("if A^G is regular then A is an Ore extension C[b; sigma]".into());
        }
    }
    if generators.is_empty() {
        notes.push("G is not cyclic; no sufficient condition is applied".into());
    } else {
        notes.push("cyclic of non-prime-power order; the converse is not asserted".into());
    }
    verdict(GateOutcome::NecessaryConditionMet, GateRule::NecessaryCondition, notes)
}
