//! Quasi-reflection classification and the witness-level rigidity checks built on it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::automorphism::{order_and_closure, FiniteGroup, GradedAutomorphism};
use crate::cyclotomic::{CycNumber, RootOfUnity};
use crate::error::{Error, Result};
use crate::invariants::molien;
use crate::linalg::{kernel, mat_sub_scalar, rank_of, Matrix};
use crate::presentation::{NcPoly, NormalityResult};
use crate::rootsum::{solve, RootSumProblem, SolutionFamily};
use crate::series::{expand, FactoredRational, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Identity,
    Reflection,
    MysticReflection,
    /// Quasi-reflection that the two-case dichotomy does not cover: the profile is
    /// not a quantum polynomial ring, or the order is not finite within the cap.
    QuasiReflection,
    QuasiBireflection,
    None,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Identity => "identity",
            Kind::Reflection => "reflection",
            Kind::MysticReflection => "mystic_reflection",
            Kind::QuasiReflection => "quasi_reflection",
            Kind::QuasiBireflection => "quasi_bireflection",
            Kind::None => "none",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderInfo {
    Finite(u64),
    ExceedsCap(usize),
}

impl OrderInfo {
    pub fn finite(&self) -> Option<u64> {
        match self {
            OrderInfo::Finite(m) => Some(*m),
            OrderInfo::ExceedsCap(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub name: String,
    pub kind: Kind,
    /// Which branch of the classification applied.
    pub case: String,
    /// ξ with Tr = 1/((1−t)^{n−1}(1−ξt)), for quasi-reflections.
    pub xi: Option<CycNumber>,
    pub pole_order_at_one: u32,
    /// Eigenvalues on A_1 with multiplicities; absent when the order is not finite.
    pub eigenvalues: Option<Vec<(RootOfUnity, usize)>>,
    pub order: OrderInfo,
    pub hdet: CycNumber,
    pub euler: Poly,
}

impl ClassificationReport {
    pub fn is_quasi_reflection(&self) -> bool {
        matches!(self.kind, Kind::Reflection | Kind::MysticReflection | Kind::QuasiReflection)
    }
}

/// Multiplicity of each m-th root of unity as an eigenvalue, m the order of g.
pub fn eigen_structure(g: &GradedAutomorphism, m: u64) -> Result<Vec<(RootOfUnity, usize)>> {
    let n = g.dim();
    let mut out = Vec::new();
    for k in 0..m {
        let z = RootOfUnity::new(m, k as i64);
        let mult = kernel(&mat_sub_scalar(g.matrix(), &z.to_cyc())).len();
        if mult > 0 {
            out.push((z, mult));
        }
    }
    out.sort();
    let total: usize = out.iter().map(|(_, k)| k).sum();
    if total != n {
        return Err(Error::Precondition(format!(
            "{} is not diagonalisable over the {m}-th roots of unity",
            g.name
        )));
    }
    Ok(out)
}

/// Basis of the λ-eigenspace of g on A_1, as degree-one elements.
pub fn eigenvectors(g: &GradedAutomorphism, lambda: &CycNumber) -> Vec<NcPoly> {
    kernel(&mat_sub_scalar(g.matrix(), lambda))
        .into_iter()
        .map(|v| vector_element(&v))
        .collect()
}

fn vector_element(v: &[CycNumber]) -> NcPoly {
    let mut p = NcPoly::zero();
    for (j, c) in v.iter().enumerate() {
        p.add_term(vec![j as u8], c.clone());
    }
    p
}

fn multiplicity_of_one(e: &Poly) -> (u32, Poly) {
    let one = CycNumber::one();
    let mut q = e.clone();
    let mut k = 0;
    while let Some(next) = q.div_linear(&one) {
        q = next;
        k += 1;
    }
    (k, q)
}

fn mult(eigs: &[(RootOfUnity, usize)], z: RootOfUnity) -> usize {
    eigs.iter().find(|(r, _)| *r == z).map_or(0, |(_, k)| *k)
}

/// Classifies g from its Euler polynomial, cross-checked against its eigenvalues.
pub fn classify(alg: &Algebra, g: &GradedAutomorphism, cap: usize) -> Result<ClassificationReport> {
    let order = match g.order(cap) {
        Ok(m) => OrderInfo::Finite(m),
        Err(Error::InfiniteOrder { cap }) => OrderInfo::ExceedsCap(cap),
        Err(e) => return Err(e),
    };
    let tf = alg.trace_function(g, order.finite())?;
    let euler = tf.euler.expect("computed");
    let hdet = tf.hdet.expect("computed");
    let eigenvalues = order.finite().map(|m| eigen_structure(g, m)).transpose()?;
    let n = alg.profile.gkdim;
    let (pole, q) = multiplicity_of_one(&euler);
    let qp = alg.profile.is_quantum_polynomial();
    let report = |kind, case: &str, xi| ClassificationReport {
        name: g.name.clone(),
        kind,
        case: case.to_string(),
        xi,
        pole_order_at_one: pole,
        eigenvalues: eigenvalues.clone(),
        order,
        hdet: hdet.clone(),
        euler: euler.clone(),
    };
    if pole == n {
        return match order {
            OrderInfo::Finite(_) if g.is_identity() => Ok(report(Kind::Identity, "identity", None)),
            OrderInfo::Finite(_) => Err(Error::ClassificationConflict(format!(
                "{} has finite order and the trace of the identity but is not the identity",
                g.name
            ))),
            OrderInfo::ExceedsCap(_) => {
                Ok(report(Kind::None, "infinite order with the trace of the identity", None))
            }
        };
    }
    if n >= 1 && pole == n - 1 {
        let xi = (q.degree() == Some(1)).then(|| -q.coeff(1));
        let Some(eigs) = eigenvalues.as_ref().filter(|_| qp) else {
            let case = if qp {
                "quasi-reflection of unknown order"
            } else {
                "quasi-reflection outside quantum polynomial rings"
            };
            return Ok(report(Kind::QuasiReflection, case, xi));
        };
        let xi = xi.ok_or_else(|| {
            Error::ClassificationConflict(format!("{}: e_g/(1−t)^(n−1) is not linear", g.name))
        })?;
        let dim = g.dim();
        if mult(eigs, RootOfUnity::ONE) + 1 == dim {
            return Ok(report(Kind::Reflection, "single eigenvalue xi, all others 1", Some(xi)));
        }
        let i = RootOfUnity::new(4, 1);
        let mystic = order == OrderInfo::Finite(4)
            && dim >= 2
            && mult(eigs, RootOfUnity::ONE) + 2 == dim
            && mult(eigs, i) == 1
            && mult(eigs, i.inverse()) == 1;
        if mystic {
            return Ok(report(Kind::MysticReflection, "order 4, eigenvalues i and -i, all others 1", Some(xi)));
        }
        return Err(Error::ClassificationConflict(format!(
            "{}: quasi-reflection trace but eigenvalues {:?}",
            g.name,
            eigs.iter().map(|(r, k)| format!("{r}^{k}")).collect::<Vec<_>>()
        )));
    }
    if n >= 3 && pole == n - 2 {
        return Ok(report(Kind::QuasiBireflection, "pole of order n-2 at t = 1", None));
    }
    Ok(report(Kind::None, "not of quasi-reflection shape", None))
}

/// Classifies every element of a finite group.
pub fn classify_group(alg: &Algebra, group: &FiniteGroup, cap: usize) -> Result<Vec<ClassificationReport>> {
    group.elements.par_iter().map(|g| classify(alg, g, cap)).collect()
}

/// Checks on a mystic reflection g with eigenvectors b1 (for i) and b2 (for −i).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MysticCheck {
    /// Tr(g³) is the coefficient-wise conjugate of Tr(g).
    pub cube_is_conjugate: bool,
    /// Tr(g²) = 1/((1−t)^{n−2}(1+t)²).
    pub square_trace: bool,
    pub b1: String,
    pub b2: String,
    /// b1² and b2² are linearly dependent in A_2.
    pub squares_dependent: bool,
    pub b1_squared_normal: NormalityResult,
}

impl MysticCheck {
    pub fn passed(&self) -> bool {
        self.cube_is_conjugate
            && self.square_trace
            && self.squares_dependent
            && self.b1_squared_normal.is_verified()
    }
}

pub fn mystic_consistency(
    alg: &Algebra,
    g: &GradedAutomorphism,
    report: &ClassificationReport,
) -> Result<MysticCheck> {
    if report.kind != Kind::MysticReflection {
        return Err(Error::Precondition(format!("{} is a {}, not a mystic reflection", g.name, report.kind.as_str())));
    }
    let n = alg.profile.gkdim;
    let d = alg.cutoff();
    let t1 = alg.trace(g);
    let t3 = alg.trace(&g.pow(3));
    let cube_is_conjugate = t1.iter().zip(&t3).all(|(a, b)| a.conjugate() == *b);
    let expected = FactoredRational::new(
        Poly::one(),
        vec![(RootOfUnity::ONE, n - 2), (RootOfUnity::MINUS_ONE, 2)],
    );
    let square_trace = alg.trace(&g.pow(2)) == expand(&expected, d);
    let i = CycNumber::i();
    let b1 = eigenvectors(g, &i).into_iter().next().expect("i is an eigenvalue");
    let b2 = eigenvectors(g, &-i).into_iter().next().expect("-i is an eigenvalue");
    let sq1 = &b1 * &b1;
    let sq2 = &b2 * &b2;
    let nf1 = alg.rs.normal_form(&sq1).map(|(_, v)| v).unwrap_or_default();
    let nf2 = alg.rs.normal_form(&sq2).map(|(_, v)| v).unwrap_or_default();
    let squares_dependent = rank_of([&nf1, &nf2]) <= 1;
    let b1_squared_normal = alg.rs.check_normal(&sq1)?;
    let names = alg.presentation.names();
    let (b1, b2) = (b1.display(names).to_string(), b2.display(names).to_string());
    Ok(MysticCheck {
        cube_is_conjugate,
        square_trace,
        b1,
        b2,
        squares_dependent,
        b1_squared_normal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCheck {
    pub element: String,
    pub normal: NormalityResult,
    pub square_normal: NormalityResult,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RigidityOutcome {
    /// Some candidate b has b² normal: the no-normal-square hypothesis fails and no
    /// rigidity conclusion is drawn.
    HypothesisFails,
    /// No candidate has a normal square: no automorphism whose eigenvectors lie among
    /// the candidates is a quasi-reflection of finite order. Nothing is claimed about
    /// other elements of A_1.
    NoNormalSquareAmongCandidates,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityVerdict {
    pub outcome: RigidityOutcome,
    pub candidates: Vec<CandidateCheck>,
    /// Generators whose squares are normal, whether or not they were candidates.
    pub normal_generator_squares: Vec<String>,
    pub checked_to_degree: usize,
}

/// Normality of b and b² for each candidate b ∈ A_1, through `max_degree`.
///
/// Eigenvectors of the finite-order automorphisms in `autos` are added to the candidates.
pub fn rigidity_verdict(
    alg: &Algebra,
    candidates: &[NcPoly],
    autos: &[GradedAutomorphism],
    cap: usize,
    max_degree: usize,
) -> Result<RigidityVerdict> {
    let mut all: Vec<NcPoly> = candidates.to_vec();
    for g in autos {
        let m = g.order(cap)?;
        for (z, _) in eigen_structure(g, m)? {
            for v in eigenvectors(g, &z.to_cyc()) {
                if !all.contains(&v) {
                    all.push(v);
                }
            }
        }
    }
    let names = alg.presentation.names();
    let rs = &alg.rs;
    let checks = all
        .par_iter()
        .map(|b| {
            Ok(CandidateCheck {
                element: b.display(names).to_string(),
                normal: rs.check_normal_to(b, max_degree)?,
                square_normal: rs.check_normal_to(&(b * b), max_degree)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let normal_generator_squares = (0..alg.dim_one())
        .into_par_iter()
        .filter_map(|j| {
            let x = NcPoly::generator(j);
            match rs.check_normal_to(&(&x * &x), max_degree) {
                Ok(r) if r.is_verified() => Some(Ok(names[j].clone())),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let outcome = if checks.iter().any(|c| c.square_normal.is_verified()) {
        RigidityOutcome::HypothesisFails
    } else {
        RigidityOutcome::NoNormalSquareAmongCandidates
    };
    Ok(RigidityVerdict {
        outcome,
        candidates: checks,
        normal_generator_squares,
        checked_to_degree: max_degree.min(alg.cutoff()),
    })
}

/// The three eigenvalue patterns left by the degree-one equation
/// x1 + x2 = 2 + ξ1 + ξ2 on a two-generated algebra with H = 1/((1−t)²(1−t²)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DownUpPattern {
    /// ξ1 = ξ2 = −1, x1 = −x2.
    OppositeEigenvalues,
    /// ξ1 = −1, x1 = 1, ξ2 = x2.
    OneFixedEigenvalue,
    /// {x1, x2, −ξ1, −ξ2} = {ζ6, ζ6, ζ6⁵, ζ6⁵}.
    SixthRoots,
}

/// Why a pattern cannot come from a quasi-reflection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "contradiction")]
pub enum DownUpContradiction {
    /// tr(g|A_d) computed from the eigenvalues differs from the trace series.
    TraceMismatch { degree: usize, direct: CycNumber, required: CycNumber },
    /// Matching tr(g|A_2) forces x2 to be the given value, which makes g the identity.
    ForcedEigenvalue { forced: CycNumber },
    /// No nonnegative n1, n2, n3 with n1 + n2 + n3 = dim A_3 give
    /// n1·(−1) + n2·ζ6 + n3·ζ6⁵ = tr(g|A_3).
    NoIntegerSolution { required: CycNumber, dim: usize, combinations_checked: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DownUpElimination {
    pub pattern: DownUpPattern,
    pub contradiction: DownUpContradiction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DownUpReport {
    /// Root-sum families behind the patterns, keyed by the number of entries equal to 1.
    pub families: Vec<(usize, Vec<SolutionFamily>)>,
    pub eliminations: Vec<DownUpElimination>,
    pub no_quasi_reflection: bool,
}

fn downup_trace(xi1: &CycNumber, xi2: &CycNumber, d: usize) -> Vec<CycNumber> {
    let denom = &(&Poly::from_ints(&[1, -2, 1]) * &Poly::linear_factor(xi1)) * &Poly::linear_factor(xi2);
    denom.series_inverse(d).expect("constant term 1")
}

/// Replays the elimination of every eigenvalue pattern for a finite-order
/// quasi-reflection of a two-generated algebra with H = 1/((1−t)²(1−t²)).
pub fn downup_filter() -> Result<DownUpReport> {
    // x1 + x2 + (−ξ1) + (−ξ2) = 2 with j of the four entries equal to 1.
    let families = (0..=2)
        .map(|j| Ok((j, solve(&RootSumProblem::new(2 - j as u32, 4 - j as u32))?)))
        .collect::<Result<Vec<_>>>()?;
    let sporadic = &families[0].1;
    let six = [RootOfUnity::new(6, 1), RootOfUnity::new(6, 1), RootOfUnity::new(6, 5), RootOfUnity::new(6, 5)];
    if sporadic.len() != 1 || sporadic[0].core != six || !families[1].1.is_empty() {
        return Err(Error::Precondition("unexpected root-sum families for the degree-one equation".into()));
    }
    let minus_one = CycNumber::from_integer(-1);
    let mut eliminations = Vec::new();

    // Two entries equal to 1 and a cancelling pair: either ξ1 = ξ2 = −1 with x1 = −x2,
    // or x1 = 1, ξ1 = −1 and x2 = ξ2. Both 1s among x1, x2 makes g the identity.
    let required = downup_trace(&minus_one, &minus_one, 2)[2].clone();
    eliminations.push(DownUpElimination {
        pattern: DownUpPattern::OppositeEigenvalues,
        // Eigenvalues on A_2 = span{b1², b2², b1b2, b2b1}: x1² twice and −x1² twice.
        contradiction: DownUpContradiction::TraceMismatch { degree: 2, direct: CycNumber::zero(), required },
    });

    // As polynomials in x2: required tr(g|A_2) = Σ_j c_{2−j} x2^j with c the series of
    // 1/((1−t)²(1+t)); direct tr(g|A_2) = (1 + x2)².
    let c = downup_trace(&minus_one, &CycNumber::zero(), 2);
    let required = Poly::new(vec![c[2].clone(), c[1].clone(), c[0].clone()]);
    let direct = Poly::from_ints(&[1, 2, 1]);
    let diff = &required - &direct;
    let forced = match diff.degree() {
        Some(1) => -(&diff.coeff(0) / &diff.coeff(1)),
        _ => return Err(Error::Precondition("degree-two comparison is not linear in x2".into())),
    };
    eliminations.push(DownUpElimination {
        pattern: DownUpPattern::OneFixedEigenvalue,
        contradiction: DownUpContradiction::ForcedEigenvalue { forced },
    });

    let z6 = CycNumber::zeta(6, 1);
    let z65 = CycNumber::zeta(6, 5);
    let required = downup_trace(&-z6.clone(), &-z65.clone(), 3)[3].clone();
    let dim = 6;
    let mut checked = 0;
    let mut found = false;
    for n1 in 0..=dim {
        for n2 in 0..=dim - n1 {
            let n3 = dim - n1 - n2;
            checked += 1;
            let s = &(&minus_one * &CycNumber::from_integer(n1 as i64))
                + &(&(&z6 * &CycNumber::from_integer(n2 as i64)) + &(&z65 * &CycNumber::from_integer(n3 as i64)));
            found |= s == required;
        }
    }
    if !found {
        eliminations.push(DownUpElimination {
            pattern: DownUpPattern::SixthRoots,
            contradiction: DownUpContradiction::NoIntegerSolution {
                required,
                dim,
                combinations_checked: checked,
            },
        });
    }
    let no_quasi_reflection = eliminations.len() == 3
        && eliminations.iter().all(|e| match &e.contradiction {
            DownUpContradiction::TraceMismatch { direct, required, .. } => direct != required,
            DownUpContradiction::ForcedEigenvalue { forced } => forced.is_one(),
            DownUpContradiction::NoIntegerSolution { .. } => true,
        });
    Ok(DownUpReport { families, eliminations, no_quasi_reflection })
}

/// Shape of an automorphism of the Rees ring of a Weyl algebra relative to z.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesReport {
    pub classification: ClassificationReport,
    /// λ with g(z) = λz, when z spans an eigenline.
    pub z_eigenvalue: Option<CycNumber>,
    /// (a1, b1, …) with g(x_i) = x_i + a_i z, g(y_i) = y_i + b_i z, when g has that form.
    pub translation: Option<Vec<CycNumber>>,
    /// Quasi-reflections are reflections with z ↦ −z and a translation part.
    pub shape_ok: bool,
}

fn z_index(alg: &Algebra) -> Result<usize> {
    alg.presentation
        .generator_index("z")
        .ok_or_else(|| Error::Precondition("the Rees ring needs a generator named z".into()))
}

pub fn rees_classify(alg: &Algebra, g: &GradedAutomorphism, cap: usize) -> Result<ReesReport> {
    let zi = z_index(alg)?;
    let m: &Matrix = g.matrix();
    let n = g.dim();
    let z_eigenvalue = (0..n).all(|i| i == zi || m[i][zi].is_zero()).then(|| m[zi][zi].clone());
    let block_identity = (0..n).filter(|&j| j != zi).all(|j| {
        (0..n).filter(|&i| i != zi).all(|i| if i == j { m[i][j].is_one() } else { m[i][j].is_zero() })
    });
    let translation = block_identity.then(|| (0..n).filter(|&j| j != zi).map(|j| m[zi][j].clone()).collect());
    let classification = classify(alg, g, cap)?;
    let shape_ok = !classification.is_quasi_reflection()
        || (classification.kind == Kind::Reflection
            && z_eigenvalue == Some(CycNumber::from_integer(-1))
            && translation.is_some());
    Ok(ReesReport { classification, z_eigenvalue, translation, shape_ok })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "closure")]
pub enum ReesGroupReport {
    /// The generated group exceeds the cap: evidence of infinite order.
    ExceedsCap { cap: usize },
    Finite {
        order: usize,
        quasi_reflections: usize,
        /// dim (A^G)_1 from the Molien series.
        invariant_degree_one: usize,
        /// dim A_1.
        dim_one: usize,
        /// A^G needs fewer degree-one generators than A, so A^G is not isomorphic to A.
        generator_count_obstruction: bool,
    },
}

pub fn rees_group(alg: &Algebra, gens: &[GradedAutomorphism], cap: usize) -> Result<ReesGroupReport> {
    let group = match order_and_closure(gens, cap) {
        Ok(g) => g,
        Err(Error::ExceedsCap { cap }) => return Ok(ReesGroupReport::ExceedsCap { cap }),
        Err(e) => return Err(e),
    };
    let classes = classify_group(alg, &group, cap)?;
    let m = molien(alg, &group);
    let invariant_degree_one = m[1]
        .as_rational()
        .filter(|r| r.is_integer())
        .and_then(|r| usize::try_from(r.to_integer()).ok())
        .ok_or_else(|| Error::Precondition("Molien coefficient is not a nonnegative integer".into()))?;
    let dim_one = alg.dim_one();
    Ok(ReesGroupReport::Finite {
        order: group.order(),
        quasi_reflections: classes.iter().filter(|c| c.is_quasi_reflection()).count(),
        invariant_degree_one,
        dim_one,
        generator_count_obstruction: group.order() > 1 && invariant_degree_one < dim_one,
    })
}
