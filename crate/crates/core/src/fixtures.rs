//! Worked examples with their expected values, runnable as a self-check.
//!
//! Each fixture builds an algebra, runs the pipelines on it and records one
//! [`Check`] per claim. A fixture that errors out records a failed check
//! instead of aborting the suite.

use std::fmt::Debug;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::automorphism::{diagonal, gorenstein_flag, order_and_closure, verify_automorphism};
use crate::cyclotomic::{rat, CycNumber, RootOfUnity};
use crate::error::{Error, Result};
use crate::invariants::{isotypic_series, molien, molien_report, regularity_gate, FixedRing, GateOutcome};
use crate::linalg::{identity, Matrix};
use crate::parse::parse_ratfunc;
use crate::presentation::{
    down_up, homogenize_lie, ore_extension, quantum_plane, rees_weyl, AlgebraProfile, Derivation,
    LieAlgebra, NcPoly, Presentation,
};
use crate::reflection::{
    classify, classify_group, downup_filter, eigen_structure, eigenvectors, mystic_consistency,
    rees_classify, rees_group, rigidity_verdict, DownUpContradiction, Kind, OrderInfo, ReesGroupReport,
    RigidityOutcome,
};
use crate::rootsum::{solve, RootSumProblem, Template};
use crate::series::{FactoredRational, Poly};

/// One claim of one fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub fixture: String,
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub cutoff: usize,
    pub order_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { cutoff: 12, order_cap: 10_000 }
    }
}

struct Recorder {
    fixture: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(fixture: &'static str) -> Self {
        Recorder { fixture, checks: Vec::new() }
    }

    fn check(&mut self, claim: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            fixture: self.fixture.to_string(),
            claim: claim.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + Debug>(&mut self, claim: &str, got: T, want: T) {
        let passed = got == want;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {want:?}") };
        self.check(claim, passed, detail);
    }

    fn series(&mut self, claim: &str, got: &[CycNumber], want: &[CycNumber]) {
        let passed = got == want;
        let detail = if passed {
            format!("agrees through degree {}", got.len().saturating_sub(1))
        } else {
            let d = got.iter().zip(want).position(|(a, b)| a != b).unwrap_or(got.len().min(want.len()));
            format!(
                "first difference at degree {d}: got {}, expected {}",
                got.get(d).map(|c| c.to_string()).unwrap_or_default(),
                want.get(d).map(|c| c.to_string()).unwrap_or_default()
            )
        };
        self.check(claim, passed, detail);
    }

    fn finish(mut self, outcome: Result<()>) -> Vec<Check> {
        if let Err(e) = outcome {
            self.check("fixture runs to completion", false, e.to_string());
        }
        self.checks
    }
}

fn c(n: i64) -> CycNumber {
    CycNumber::from_integer(n)
}

/// Parses a rational function such as `1/((1-t)^2*(1+t))`.
pub fn rational(s: &str) -> Result<FactoredRational> {
    FactoredRational::from_ratfunc(&parse_ratfunc(s)?)
}

fn expansion(s: &str, d: usize) -> Result<Vec<CycNumber>> {
    Ok(rational(s)?.expand(d))
}

/// k⟨x, y⟩/(x² − y²).
pub fn skew_plane_squares() -> Result<Presentation> {
    Presentation::parse("skew_plane", &[("x", 1), ("y", 1)], &["x*x - y*y"])
}

/// k⟨x, y⟩/(x² + y²).
pub fn sum_of_squares_plane() -> Result<Presentation> {
    Presentation::parse("sum_of_squares", &[("x", 1), ("y", 1)], &["x*x + y*y"])
}

/// Two Ore extensions of k⟨b1, b2⟩/(b1² − b2²): b3 with τ = diag(−1, 1), then b4
/// with τ' = diag(−1, 1, 1) and δ(b3) = −(b1b2 + b2b1), so that b3b4 − b4b3 = b1b2 + b2b1.
pub fn ore_mystic_algebra() -> Result<Presentation> {
    let b = Arc::new(Presentation::parse("B", &[("b1", 1), ("b2", 1)], &["b1*b1 - b2*b2"])?);
    let tau = verify_automorphism(&b, "tau", diagonal(&[c(-1), c(1)]))?;
    let c3 = Arc::new(ore_extension(&b, &tau, None, "b3", 1)?);
    let tau2 = verify_automorphism(&c3, "tau2", diagonal(&[c(-1), c(1), c(1)]))?;
    let delta = Derivation {
        images: vec![NcPoly::zero(), NcPoly::zero(), c3.parse_element("-(b1*b2 + b2*b1)")?],
    };
    let mut a = ore_extension(&c3, &tau2, Some(&delta), "b4", 1)?;
    a.name = "ore_mystic".into();
    Ok(a)
}

/// Homogenized enveloping algebra of the Lie algebra kx + ky with [x, y] = y.
pub fn solvable_lie_homogenization() -> Result<Presentation> {
    let mut p = homogenize_lie(&LieAlgebra::new(&["x", "y"]).bracket(0, 1, &[(1, 1)]))?;
    p.name = "solvable_lie".into();
    Ok(p)
}

/// Homogenized enveloping algebra of sl2.
pub fn sl2_homogenization() -> Result<Presentation> {
    let mut p = homogenize_lie(&LieAlgebra::sl2())?;
    p.name = "sl2_homogenized".into();
    Ok(p)
}

/// Profile of a two-generated algebra of global dimension 3 with cubic relations.
pub fn down_up_profile() -> Result<AlgebraProfile> {
    Ok(AlgebraProfile::new(3, rational("1/((1-t)^2*(1-t^2))")?))
}

/// Reflection of the Rees ring of the n-th Weyl algebra: identity on x_i, y_i,
/// z ↦ −z plus `translation` (a1, b1, a2, b2, …) times z.
pub fn rees_reflection(n: usize, translation: &[CycNumber]) -> Matrix {
    let dim = 2 * n + 1;
    let mut m = identity(dim);
    m[dim - 1][dim - 1] = c(-1);
    for (j, v) in translation.iter().enumerate() {
        m[dim - 1][j] = v.clone();
    }
    m
}

/// Runs every fixture.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(skew_plane_reflection(cfg));
    out.extend(skew_plane_mystic(cfg));
    out.extend(ore_mystic(cfg));
    out.extend(rees_first(cfg));
    out.extend(rees_second(cfg));
    out.extend(sl2_rigidity(cfg));
    out.extend(solvable_lie(cfg));
    out.extend(down_up_elimination(cfg));
    out.extend(two_generator_forms(cfg));
    out.extend(root_sums());
    out
}

fn skew_plane_reflection(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("skew plane, x -> -x");
    let res = (|| {
        let d = cfg.cutoff;
        let a = Algebra::quantum_polynomial(skew_plane_squares()?, d)?;
        let h = a.automorphism("h", diagonal(&[c(-1), c(1)]))?;
        r.series("trace of h is 1/(1+t^2)", &a.trace(&h), &expansion("1/(1+t^2)", d)?);
        let k = classify(&a, &h, cfg.order_cap)?;
        r.eq("h is not a quasi-reflection although it is a reflection of A_1", k.kind, Kind::None);
        let g = order_and_closure(&[h], cfg.order_cap)?;
        let m = molien(&a, &g);
        r.series(
            "fixed ring series is (1-t+t^2)/((1-t)^2(1+t^2))",
            &m,
            &expansion("(1-t+t^2)/((1-t)^2*(1+t^2))", d)?,
        );
        let classes = classify_group(&a, &g, cfg.order_cap)?;
        let rep = molien_report(&a, &g, &classes)?;
        r.check(
            "fixed ring series is not 1/p(t)",
            matches!(rep.fixed_ring, FixedRing::NotInverseOfPolynomial { .. }),
            format!("{:?}", rep.fixed_ring),
        );
        let v = regularity_gate(&a.profile, &classes);
        r.eq("fixed ring has infinite global dimension", v.outcome, GateOutcome::InfiniteGlobalDimension);
        let hdets: Vec<CycNumber> = classes.iter().map(|k| k.hdet.clone()).collect();
        r.check("fixed ring is Gorenstein (hdet trivial)", gorenstein_flag(&hdets), format!("{hdets:?}"));
        Ok(())
    })();
    r.finish(res)
}

fn skew_plane_mystic(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("skew plane, diag(i, -i)");
    let res = (|| {
        let d = cfg.cutoff;
        let a = Algebra::quantum_polynomial(skew_plane_squares()?, d)?;
        let i = CycNumber::i();
        let g = a.automorphism("g", diagonal(&[i.clone(), -i.clone()]))?;
        r.series("trace of g is 1/(1-t^2)", &a.trace(&g), &expansion("1/(1-t^2)", d)?);
        let g2 = g.pow(2);
        r.series("trace of g^2 is 1/(1+t)^2", &a.trace(&g2), &expansion("1/(1+t)^2", d)?);
        let k = classify(&a, &g, cfg.order_cap)?;
        r.eq("g is a mystic reflection", k.kind, Kind::MysticReflection);
        r.eq("xi of g is -1", k.xi.clone(), Some(c(-1)));
        r.eq("g has order 4", k.order, OrderInfo::Finite(4));
        r.eq("hdet of g equals xi", Some(k.hdet.clone()), k.xi.clone());
        r.eq("g^2 is not a quasi-reflection", classify(&a, &g2, cfg.order_cap)?.kind, Kind::None);
        r.eq(
            "eigenvalues of g on A_1 are i and -i",
            eigen_structure(&g, 4)?,
            vec![(RootOfUnity::new(4, 1), 1), (RootOfUnity::new(4, 3), 1)],
        );
        let mc = mystic_consistency(&a, &g, &k)?;
        r.check("mystic consistency: cube, square trace, b1^2 ~ b2^2, b1^2 normal", mc.passed(), format!("{mc:?}"));
        let grp = order_and_closure(&[g], cfg.order_cap)?;
        let classes = classify_group(&a, &grp, cfg.order_cap)?;
        r.eq("fixed ring of <g> is regular", regularity_gate(&a.profile, &classes).outcome, GateOutcome::Regular);
        Ok(())
    })();
    r.finish(res)
}

fn ore_mystic(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("iterated Ore extension, diag(i, -i, 1, 1)");
    let res = (|| {
        let d = cfg.cutoff;
        let a = Algebra::quantum_polynomial(ore_mystic_algebra()?, d)?;
        let i = CycNumber::i();
        let g = a.automorphism("g", diagonal(&[i.clone(), -i.clone(), c(1), c(1)]))?;
        r.series("trace of g is 1/((1-t)^3(1+t))", &a.trace(&g), &expansion("1/((1-t)^3*(1+t))", d)?);
        let k = classify(&a, &g, cfg.order_cap)?;
        r.eq("g is a mystic reflection", k.kind, Kind::MysticReflection);
        let mc = mystic_consistency(&a, &g, &k)?;
        r.check("mystic consistency checks pass", mc.passed(), format!("{mc:?}"));
        let grp = order_and_closure(std::slice::from_ref(&g), cfg.order_cap)?;
        let classes = classify_group(&a, &grp, cfg.order_cap)?;
        let rep = molien_report(&a, &grp, &classes)?;
        r.series(
            "fixed ring series is 1/((1-t)^2(1-t^2)^2)",
            &rep.series,
            &expansion("1/((1-t)^2*(1-t^2)^2)", d)?,
        );
        match &rep.fixed_ring {
            FixedRing::Reconstructed { q, q_at_one, deg_q, .. } => {
                r.eq("q(t) = (1+t)^2", q.clone(), Poly::from_ints(&[1, 2, 1]));
                r.eq("q(1) = |G| = 4", q_at_one.clone(), c(4));
                r.eq("deg q = number of quasi-reflections = 2", (*deg_q, rep.quasi_count_direct), (2, 2));
            }
            other => r.check("fixed ring series reconstructs as 1/e(t)", false, format!("{other:?}")),
        }
        r.eq("Laurent coefficient equals r/(2|G|) = 1/4", rep.quasi_count_laurent.clone(), Some(rat(1, 4)));
        let iso = isotypic_series(&a, &g, 4);
        let base = "(1-t)^4*(1+t)^2";
        for (k, num) in ["1", "t", "t^2", "t"].iter().enumerate() {
            r.series(
                &format!("isotypic component for i^{k} is {num}/((1-t)^4(1+t)^2)"),
                &iso[k],
                &expansion(&format!("{num}/({base})"), d)?,
            );
        }
        let b1 = NcPoly::generator(0);
        let v = rigidity_verdict(&a, &[b1], &[], cfg.order_cap, d.min(6))?;
        r.eq("b1^2 is normal, so the no-normal-square hypothesis fails", v.outcome, RigidityOutcome::HypothesisFails);
        Ok(())
    })();
    r.finish(res)
}

fn rees_first(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("Rees ring of the first Weyl algebra");
    let res = (|| {
        let d = cfg.cutoff;
        let a = Algebra::quantum_polynomial(rees_weyl(1)?, d)?;
        let g = a.automorphism("g", diagonal(&[c(1), c(1), c(-1)]))?;
        r.series("trace of z -> -z is 1/((1-t)^2(1+t))", &a.trace(&g), &expansion("1/((1-t)^2*(1+t))", d)?);
        let rep = rees_classify(&a, &g, cfg.order_cap)?;
        r.eq("z -> -z is a reflection", rep.classification.kind, Kind::Reflection);
        r.eq("xi = hdet = -1", (rep.classification.xi.clone(), rep.classification.hdet.clone()), (Some(c(-1)), c(-1)));
        r.check("reflection has the translation shape", rep.shape_ok, format!("{:?}", rep.translation));
        r.eq(
            "Euler polynomial is (1-t)^2(1+t)",
            rep.classification.euler.clone(),
            Poly::from_ints(&[1, -1, -1, 1]),
        );
        let z = eigenvectors(&g, &c(-1));
        let normal = match z.as_slice() {
            [b] => a.rs.check_normal(b)?.is_verified(),
            _ => false,
        };
        r.check("the (-1)-eigenvector is normal", normal, format!("{} eigenvectors", z.len()));
        let fixed = a.automorphism("f", diagonal(&[c(-1), c(-1), c(1)]))?;
        let fk = rees_classify(&a, &fixed, cfg.order_cap)?;
        r.check(
            "an automorphism fixing z is not a quasi-reflection",
            !fk.classification.is_quasi_reflection(),
            fk.classification.kind.as_str(),
        );
        let grp = order_and_closure(std::slice::from_ref(&g), cfg.order_cap)?;
        let classes = classify_group(&a, &grp, cfg.order_cap)?;
        let mr = molien_report(&a, &grp, &classes)?;
        r.series("fixed ring series is 1/((1-t)^2(1-t^2))", &mr.series, &expansion("1/((1-t)^2*(1-t^2))", d)?);
        r.eq("fixed ring of <g> is regular", regularity_gate(&a.profile, &classes).outcome, GateOutcome::Regular);
        let hdets: Vec<CycNumber> = classes.iter().map(|k| k.hdet.clone()).collect();
        r.check("fixed ring is not Gorenstein-trivial (hdet = -1)", !gorenstein_flag(&hdets), format!("{hdets:?}"));
        let g2 = a.automorphism("g2", rees_reflection(1, &[c(1), c(0)]))?;
        let two = rees_group(&a, &[g.clone(), g2], 500)?;
        r.check(
            "two distinct reflections generate a group beyond the order cap",
            matches!(two, ReesGroupReport::ExceedsCap { .. }),
            format!("{two:?}"),
        );
        match rees_group(&a, &[g], cfg.order_cap)? {
            ReesGroupReport::Finite { invariant_degree_one, dim_one, generator_count_obstruction, .. } => {
                r.eq("dim (A^G)_1 = 2 < 3 = dim A_1", (invariant_degree_one, dim_one), (2, 3));
                r.check("generator count rules out A^G = A", generator_count_obstruction, "");
            }
            other => r.check("group {Id, g} is finite", false, format!("{other:?}")),
        }
        let v = rigidity_verdict(&a, &[NcPoly::generator(2)], &[], cfg.order_cap, d.min(6))?;
        r.eq("z^2 is normal, so the no-normal-square hypothesis fails", v.outcome, RigidityOutcome::HypothesisFails);
        Ok(())
    })();
    r.finish(res)
}

fn rees_second(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("Rees ring of the second Weyl algebra");
    let res = (|| {
        let d = cfg.cutoff;
        let a = Algebra::quantum_polynomial(rees_weyl(2)?, d)?;
        let g = a.automorphism("g", rees_reflection(2, &[c(1), c(0), c(0), c(2)]))?;
        r.eq(
            "eigenvalues of a translated reflection are 1 (x4) and -1",
            eigen_structure(&g, 2)?,
            vec![(RootOfUnity::ONE, 4), (RootOfUnity::MINUS_ONE, 1)],
        );
        let rep = rees_classify(&a, &g, cfg.order_cap)?;
        r.eq("translated reflection is a reflection", rep.classification.kind, Kind::Reflection);
        r.check("translated reflection has the expected shape", rep.shape_ok, format!("{:?}", rep.translation));
        Ok(())
    })();
    r.finish(res)
}

fn sl2_rigidity(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("homogenized sl2");
    let res = (|| {
        let d = cfg.cutoff;
        let a = Algebra::quantum_polynomial(sl2_homogenization()?, d)?;
        let cands: Vec<NcPoly> = (0..3).map(NcPoly::generator).collect();
        let v = rigidity_verdict(&a, &cands, &[], cfg.order_cap, d)?;
        r.eq(
            "no square of e, f, h is normal",
            v.outcome,
            RigidityOutcome::NoNormalSquareAmongCandidates,
        );
        r.eq("z is the only generator with normal square", v.normal_generator_squares, vec!["z".to_string()]);
        Ok(())
    })();
    r.finish(res)
}

fn solvable_lie(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("homogenized solvable Lie algebra, y -> -y");
    let res = (|| {
        let d = cfg.cutoff;
        let a = Algebra::quantum_polynomial(solvable_lie_homogenization()?, d)?;
        let g = a.automorphism("g", diagonal(&[c(1), c(-1), c(1)]))?;
        let k = classify(&a, &g, cfg.order_cap)?;
        r.eq("y -> -y is a reflection", k.kind, Kind::Reflection);
        let grp = order_and_closure(&[g], cfg.order_cap)?;
        r.series(
            "fixed ring series is 1/((1-t)^2(1-t^2))",
            &molien(&a, &grp),
            &expansion("1/((1-t)^2*(1-t^2))", d)?,
        );
        let classes = classify_group(&a, &grp, cfg.order_cap)?;
        r.eq("fixed ring of <g> is regular", regularity_gate(&a.profile, &classes).outcome, GateOutcome::Regular);
        Ok(())
    })();
    r.finish(res)
}

fn down_up_elimination(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("down-up algebra A(1,1,0)");
    let res = (|| {
        let rep = downup_filter()?;
        let mut it = rep.eliminations.iter().map(|e| &e.contradiction);
        match it.next() {
            Some(DownUpContradiction::TraceMismatch { degree: 2, direct, required }) => {
                r.eq("opposite eigenvalues: tr(g|A_2) is 0, required 2", (direct.clone(), required.clone()), (c(0), c(2)))
            }
            other => r.check("opposite eigenvalues are eliminated in degree 2", false, format!("{other:?}")),
        }
        match it.next() {
            Some(DownUpContradiction::ForcedEigenvalue { forced }) => {
                r.eq("one fixed eigenvalue forces x2 = 1", forced.clone(), c(1))
            }
            other => r.check("one fixed eigenvalue is eliminated", false, format!("{other:?}")),
        }
        match it.next() {
            Some(DownUpContradiction::NoIntegerSolution { dim, combinations_checked, .. }) => r.eq(
                "sixth roots: no n1 + n2 + n3 = 6 fits degree 3",
                (*dim, *combinations_checked),
                (6, 28),
            ),
            other => r.check("sixth roots are eliminated in degree 3", false, format!("{other:?}")),
        }
        r.check("no finite-order quasi-reflection", rep.no_quasi_reflection, "");

        let d = cfg.cutoff;
        let a = Algebra::new(down_up(&c(1), &c(1))?, down_up_profile()?, d)?;
        let mut tried = 0;
        let mut bad = Vec::new();
        for (m1, m2) in [(6u64, 4u64), (2, 2), (3, 5)] {
            for p in 0..m1 {
                for q in 0..m2 {
                    let g = a.automorphism(
                        "g",
                        diagonal(&[CycNumber::zeta(m1, p as i64), CycNumber::zeta(m2, q as i64)]),
                    )?;
                    let k = classify(&a, &g, cfg.order_cap)?;
                    tried += 1;
                    if k.is_quasi_reflection() {
                        bad.push(format!("zeta({m1},{p}), zeta({m2},{q})"));
                    }
                }
            }
        }
        r.check(
            "no diagonal automorphism is a quasi-reflection",
            bad.is_empty(),
            format!("{tried} tried; quasi-reflections: {bad:?}"),
        );
        Ok(())
    })();
    r.finish(res)
}

fn two_generator_forms(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = Recorder::new("two-generator trace forms");
    let res = (|| {
        let d = cfg.cutoff;
        let xis = [CycNumber::zeta(5, 1), CycNumber::zeta(8, 1), CycNumber::zeta(3, 1)];
        for q in [c(2), CycNumber::zeta(3, 1)] {
            // b1b2 + q b2b1 = 0.
            let a = Algebra::quantum_polynomial(quantum_plane(&-q.clone())?, d)?;
            for xi in &xis {
                let g = a.automorphism("g", diagonal(&[xi.clone(), -xi.clone()]))?;
                let den = &Poly::linear_factor(xi) * &Poly::linear_factor(&-xi.clone());
                r.series(
                    &format!("quantum plane q = {q}: trace of diag({xi}, -{xi}) is 1/((1-xi t)(1+xi t))"),
                    &a.trace(&g),
                    &den.series_inverse(d)?,
                );
            }
        }
        let a = Algebra::quantum_polynomial(sum_of_squares_plane()?, d)?;
        for xi in &xis {
            let g = a.automorphism("g", diagonal(&[xi.clone(), -xi.clone()]))?;
            let den = Poly::new(vec![c(1), c(0), xi * xi]);
            r.series(
                &format!("x^2 + y^2: trace of diag({xi}, -{xi}) is 1/(1+xi^2 t^2)"),
                &a.trace(&g),
                &den.series_inverse(d)?,
            );
        }
        Ok(())
    })();
    r.finish(res)
}

fn root_sums() -> Vec<Check> {
    let mut r = Recorder::new("root-of-unity sums");
    let res = (|| {
        let z = RootOfUnity::new;
        let f = solve(&RootSumProblem::new(2, 4))?;
        r.eq("2 = x1+..+x4 only by z6, z6, z6^5, z6^5", f.iter().map(|f| f.core.clone()).collect::<Vec<_>>(), vec![
            vec![z(6, 1), z(6, 1), z(6, 5), z(6, 5)],
        ]);
        r.check("1 = x1+x2+x3 has no solution", solve(&RootSumProblem::new(1, 3))?.is_empty(), "");
        let f = solve(&RootSumProblem::new(0, 2))?;
        r.check(
            "0 = x1+x2 only as a cancelling pair",
            f.len() == 1 && f[0].blocks == [Template::CancellingPair],
            format!("{f:?}"),
        );
        let strict = |n, k| RootSumProblem::new(n, k).excluding(true, true);
        let f = solve(&strict(2, 6))?;
        r.eq(
            "2 = x1+..+x6 (no -1, no cancelling pair) only by z6, z6^5, z10, z10^3, z10^7, z10^9",
            f.iter().map(|f| f.core.clone()).collect::<Vec<_>>(),
            vec![vec![z(6, 1), z(6, 5), z(10, 1), z(10, 3), z(10, 7), z(10, 9)]],
        );
        r.check("3 = x1+..+x7 (no -1, no cancelling pair) has no solution", solve(&strict(3, 7))?.is_empty(), "");
        let f = solve(&strict(4, 8))?;
        r.eq(
            "4 = x1+..+x8 (no -1, no cancelling pair) only by 4(z6 + z6^5)",
            f.iter().map(|f| f.core.clone()).collect::<Vec<_>>(),
            vec![[vec![z(6, 1); 4], vec![z(6, 5); 4]].concat()],
        );
        Ok(())
    })();
    r.finish(res)
}

/// Error for callers that want a single verdict over the suite.
pub fn first_failure(checks: &[Check]) -> Result<()> {
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(Error::Precondition(format!("{}: {} ({})", c.fixture, c.claim, c.detail))),
        None => Ok(()),
    }
}
