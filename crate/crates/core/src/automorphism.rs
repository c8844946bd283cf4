//! Graded automorphisms given by their action on degree-one generators.
//!
//! Matrices use the column convention: column j holds the coordinates of
//! g(x_j). Composition `g·h` is the matrix product `G·H`.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{lcm, CycNumber, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, axpy, unit, Matrix, SparseVec};
use crate::parse::{parse_cyc, split_top_level};
use crate::presentation::{
    groebner_truncated, AlgebraProfile, MonomialOrder, NcPoly, Presentation, RewriteSystem,
};
use crate::series::{
    cyclotomic_factorization, default_order_bound, reconstruct_rational, Factorization, Poly,
};
use crate::RootOfUnity;

/// Default bound on group sizes and element orders.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

#[derive(Clone, Debug)]
pub struct GradedAutomorphism {
    pub name: String,
    matrix: Matrix,
    presentation: Arc<Presentation>,
}

impl PartialEq for GradedAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && *self.presentation == *other.presentation
    }
}

/// Checks that `m` defines a graded automorphism of `p`.
///
/// Every relation r must map to zero in the algebra: its image is reduced by a
/// Gröbner basis truncated at the largest relation degree.
pub fn verify_automorphism(
    p: &Arc<Presentation>,
    name: &str,
    m: Matrix,
) -> Result<GradedAutomorphism> {
    let n = p.num_generators();
    if let Some(j) = p.degrees().iter().position(|&d| d != 1) {
        return Err(Error::NotDegreeOne(p.names()[j].clone()));
    }
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            rows: m.len(),
            cols: m.first().map_or(0, |r| r.len()),
            generators: n,
        });
    }
    if linalg::rank(&m) != n {
        return Err(Error::NonInvertible);
    }
    let g = GradedAutomorphism { name: name.to_string(), matrix: m, presentation: p.clone() };
    let rs = groebner_truncated(p, &MonomialOrder::deglex(n), p.max_relation_degree().max(1))?;
    for r in p.relations() {
        let img = g.apply(r);
        let (d, v) = rs.normal_form(&img).expect("relation degree within cutoff");
        if !v.is_empty() {
            return Err(Error::NotAnAutomorphism {
                relation: p.format(r),
                image: p.format(&rs.to_ncpoly(d, &v)),
            });
        }
    }
    Ok(g)
}

impl GradedAutomorphism {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn identity(p: &Arc<Presentation>) -> Self {
        GradedAutomorphism {
            name: "id".into(),
            matrix: linalg::identity(p.num_generators()),
            presentation: p.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        linalg::is_identity(&self.matrix)
    }

    /// g(x_j) as an element of the free algebra.
    pub fn image_of_generator(&self, j: usize) -> NcPoly {
        let mut p = NcPoly::zero();
        for (k, row) in self.matrix.iter().enumerate() {
            p.add_term(vec![k as u8], row[j].clone());
        }
        p
    }

    pub fn apply(&self, p: &NcPoly) -> NcPoly {
        let imgs: Vec<NcPoly> = (0..self.dim()).map(|j| self.image_of_generator(j)).collect();
        p.substitute(&imgs)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if *self.presentation != *other.presentation {
            return Err(Error::MixedPresentations);
        }
        Ok(GradedAutomorphism {
            name: format!("{}*{}", self.name, other.name),
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
            presentation: self.presentation.clone(),
        })
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(&self.presentation);
        let mut base = self.clone();
        let name = format!("{}^{}", self.name, e);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc.matrix = linalg::mat_mul(&acc.matrix, &base.matrix);
            }
            base.matrix = linalg::mat_mul(&base.matrix, &base.matrix);
            e >>= 1;
        }
        acc.name = name;
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            // Solve M x = e_j through the kernel of [M | -e_j].
            let aug: Matrix = self
                .matrix
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut r = row.clone();
                    r.push(CycNumber::from_integer(-((i == j) as i64)));
                    r
                })
                .collect();
            let k = linalg::kernel(&aug);
            let v = k.into_iter().find(|v| !v[n].is_zero()).ok_or(Error::NonInvertible)?;
            let s = v[n].inverse()?;
            cols.push(v[..n].iter().map(|x| x * &s).collect::<Vec<_>>());
        }
        let matrix = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
        Ok(GradedAutomorphism {
            name: format!("{}^-1", self.name),
            matrix,
            presentation: self.presentation.clone(),
        })
    }

    /// Smallest m ≥ 1 with g^m = 1, searching up to `cap`.
    pub fn order(&self, cap: usize) -> Result<u64> {
        let mut acc = self.matrix.clone();
        for m in 1..=cap as u64 {
            if linalg::is_identity(&acc) {
                return Ok(m);
            }
            acc = linalg::mat_mul(&acc, &self.matrix);
        }
        Err(Error::InfiniteOrder { cap })
    }

    fn key(&self, conductor: u64) -> Vec<Vec<Rational>> {
        self.matrix
            .iter()
            .flat_map(|r| r.iter().map(|c| c.key_at(conductor)))
            .collect()
    }

    fn conductor(&self) -> u64 {
        self.matrix
            .iter()
            .flatten()
            .fold(1, |acc, c| lcm(acc, c.conductor()))
    }

    /// Column j = coordinates of g(u_j) for the normal words u_j of degree d, d ≤ cutoff.
    pub fn graded_matrices(&self, rs: &RewriteSystem) -> Vec<Vec<SparseVec>> {
        let mut out: Vec<Vec<SparseVec>> = vec![vec![unit(0)]];
        for d in 1..=rs.cutoff() {
            let prev = &out[d - 1];
            let cols = rs
                .normal_words(d)
                .iter()
                .map(|w| {
                    let (u, j) = w.split_at(w.len() - 1);
                    let gu = &prev[rs.index_of(u).expect("prefix of a normal word is normal")];
                    let mut acc = SparseVec::new();
                    for (k, row) in self.matrix.iter().enumerate() {
                        let c = &row[j[0] as usize];
                        if !c.is_zero() {
                            axpy(&mut acc, c, &rs.mul_gen(d - 1, gu, k));
                        }
                    }
                    acc
                })
                .collect();
            out.push(cols);
        }
        out
    }
}

/// Trace of each graded piece from graded matrices.
pub fn traces_from_matrices(mats: &[Vec<SparseVec>]) -> Vec<CycNumber> {
    mats.iter()
        .map(|cols| {
            cols.iter()
                .enumerate()
                .filter_map(|(k, c)| c.get(&k).cloned())
                .sum()
        })
        .collect()
}

/// tr(g|A_i) for i = 0..=cutoff.
pub fn trace_series(rs: &RewriteSystem, g: &GradedAutomorphism) -> Vec<CycNumber> {
    traces_from_matrices(&g.graded_matrices(rs))
}

/// Euler polynomial of g with its roots, when they are roots of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerData {
    pub euler: Poly,
    pub roots: Option<Vec<(RootOfUnity, u32)>>,
}

/// e_g with Tr(g) = 1/e_g and deg e_g ≤ deg e, verified against every supplied trace coefficient.
pub fn euler_polynomial(
    profile: &AlgebraProfile,
    trace: &[CycNumber],
    order: Option<u64>,
) -> Result<EulerData> {
    let deg = profile.euler_degree();
    let d = trace.len().saturating_sub(1);
    if d < 2 * deg {
        return Err(Error::CutoffTooLow { cutoff: d, needed: 2 * deg });
    }
    let euler = reconstruct_rational(trace, deg, d)?;
    let bound = default_order_bound(deg, order);
    let roots = match cyclotomic_factorization(&euler, bound) {
        Factorization::Roots { roots, .. } => Some(roots),
        Factorization::Failure { residual } => {
            if order.is_some() {
                return Err(Error::NonUnityRoot { residual: residual.to_string() });
            }
            None
        }
    };
    Ok(EulerData { euler, roots })
}

/// (−1)^d times the leading coefficient of e_g.
pub fn hdet(euler: &Poly, gldim: u32) -> CycNumber {
    let lc = euler.leading_coeff();
    if gldim % 2 == 1 {
        -lc
    } else {
        lc
    }
}

/// True iff every homological determinant is 1.
pub fn gorenstein_flag(hdets: &[CycNumber]) -> bool {
    hdets.iter().all(|h| h.is_one())
}

/// Everything known about the trace of one automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFunction {
    pub coefficients: Vec<CycNumber>,
    pub euler: Option<Poly>,
    pub roots: Option<Vec<(RootOfUnity, u32)>>,
    pub hdet: Option<CycNumber>,
    /// deg e_g.
    pub l: Option<usize>,
}

impl TraceFunction {
    pub fn compute(
        profile: &AlgebraProfile,
        coefficients: Vec<CycNumber>,
        order: Option<u64>,
    ) -> Result<Self> {
        let e = euler_polynomial(profile, &coefficients, order)?;
        let h = hdet(&e.euler, profile.gldim);
        Ok(TraceFunction {
            coefficients,
            l: e.euler.degree(),
            hdet: Some(h),
            roots: e.roots,
            euler: Some(e.euler),
        })
    }
}

/// A finite group of automorphisms, identity first.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub elements: Vec<GradedAutomorphism>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        self.elements[0].presentation()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Breadth-first closure of `gens` under composition.
pub fn order_and_closure(gens: &[GradedAutomorphism], cap: usize) -> Result<FiniteGroup> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator is needed".into()))?;
    if gens.iter().any(|g| *g.presentation != *first.presentation) {
        return Err(Error::MixedPresentations);
    }
    let m = gens.iter().fold(1, |acc, g| lcm(acc, g.conductor()));
    let id = GradedAutomorphism::identity(&first.presentation);
    let mut seen: HashMap<Vec<Vec<Rational>>, usize> = HashMap::from([(id.key(m), 0)]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in gens {
            let mut h = elements[k].compose(g)?;
            let key = h.key(m);
            if seen.contains_key(&key) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::ExceedsCap { cap });
            }
            h.name = if k == 0 { g.name.clone() } else { h.name };
            seen.insert(key, elements.len());
            queue.push_back(elements.len());
            elements.push(h);
        }
    }
    Ok(FiniteGroup { elements })
}

/// One `automorphism <name> on <algebra>` block of a matrix file.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixSpec {
    pub name: String,
    pub algebra: String,
    pub matrix: Matrix,
}

/// Parses matrix files: a header line, then one row per line with
/// comma-separated entries in the coefficient grammar.
pub fn parse_matrices(text: &str) -> Result<Vec<MatrixSpec>> {
    let mut out: Vec<MatrixSpec> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("automorphism") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            match parts.as_slice() {
                [name, "on", algebra] => out.push(MatrixSpec {
                    name: name.to_string(),
                    algebra: algebra.to_string(),
                    matrix: Vec::new(),
                }),
                _ => return Err(Error::parse(line, "expected `automorphism <name> on <algebra>`")),
            }
            continue;
        }
        let spec = out
            .last_mut()
            .ok_or_else(|| Error::parse(line, "matrix row before automorphism header"))?;
        let row = split_top_level(body)
            .into_iter()
            .map(|e| parse_cyc(e.trim()).map_err(|err| Error::parse(line, err.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = spec.matrix.first() {
            if first.len() != row.len() {
                return Err(Error::parse(line, "rows have different lengths"));
            }
        }
        spec.matrix.push(row);
    }
    if out.is_empty() {
        return Err(Error::parse(0, "no automorphism found"));
    }
    Ok(out)
}

/// Text form accepted by [`parse_matrices`].
pub fn format_matrix(name: &str, algebra: &str, m: &Matrix) -> String {
    let mut s = format!("automorphism {name} on {algebra}\n");
    for row in m {
        let r: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        s += &r.join(", ");
        s.push('\n');
    }
    s
}

/// Diagonal matrix from entries.
pub fn diagonal(entries: &[CycNumber]) -> Matrix {
    let n = entries.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { entries[i].clone() } else { CycNumber::zero() })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::rees_weyl;
    use crate::series::FactoredRational;

    fn skew() -> Arc<Presentation> {
        Arc::new(Presentation::parse("A", &[("x", 1), ("y", 1)], &["x*x - y*y"]).unwrap())
    }

    fn c(n: i64) -> CycNumber {
        CycNumber::from_integer(n)
    }

    #[test]
    fn verify_examples() {
        let p = skew();
        verify_automorphism(&p, "h", diagonal(&[c(-1), c(1)])).unwrap();
        let i = CycNumber::i();
        verify_automorphism(&p, "g", diagonal(&[i.clone(), -i])).unwrap();
        assert!(matches!(
            verify_automorphism(&p, "bad", diagonal(&[c(2), c(1)])),
            Err(Error::NotAnAutomorphism { .. })
        ));
        assert!(matches!(
            verify_automorphism(&p, "sing", diagonal(&[c(0), c(1)])),
            Err(Error::NonInvertible)
        ));
        assert!(matches!(
            verify_automorphism(&p, "small", diagonal(&[c(1)])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn closure_and_order() {
        let p = skew();
        let i = CycNumber::i();
        let g = verify_automorphism(&p, "g", diagonal(&[i.clone(), -i])).unwrap();
        let grp = order_and_closure(std::slice::from_ref(&g), 100).unwrap();
        assert_eq!(grp.order(), 4);
        assert_eq!(g.order(100).unwrap(), 4);
        assert!(g.compose(&g.inverse().unwrap()).unwrap().is_identity());
        let id = GradedAutomorphism::identity(&p);
        assert_eq!(order_and_closure(&[id], 10).unwrap().order(), 1);
        assert!(matches!(order_and_closure(&[g], 3), Err(Error::ExceedsCap { cap: 3 })));
    }

    #[test]
    fn traces_on_skew_plane() {
        let p = skew();
        let rs = groebner_truncated(&p, &MonomialOrder::deglex(2), 12).unwrap();
        let h = verify_automorphism(&p, "h", diagonal(&[c(-1), c(1)])).unwrap();
        let t = trace_series(&rs, &h);
        let want = FactoredRational::new(Poly::one(), vec![(RootOfUnity::new(4, 1), 1), (RootOfUnity::new(4, 3), 1)]);
        assert_eq!(t, want.expand(12));
        let id = GradedAutomorphism::identity(&p);
        let dims: Vec<CycNumber> = rs.dims().iter().map(|&d| c(d as i64)).collect();
        assert_eq!(trace_series(&rs, &id), dims);

        let prof = AlgebraProfile::quantum_polynomial(2);
        let tf = TraceFunction::compute(&prof, t, Some(2)).unwrap();
        assert_eq!(tf.euler, Some(Poly::from_ints(&[1, 0, 1])));
        assert_eq!(tf.hdet, Some(c(1)));
        assert_eq!(tf.l, Some(2));
    }

    #[test]
    fn non_diagonal_action_matches_direct_substitution() {
        // Oracle: apply g to each normal word in the free algebra, then reduce.
        let p = Arc::new(rees_weyl(1).unwrap());
        let rs = groebner_truncated(&p, &MonomialOrder::deglex(3), 6).unwrap();
        let m = vec![
            vec![c(1), c(0), c(0)],
            vec![c(0), c(1), c(0)],
            vec![c(2), c(-1), c(-1)],
        ];
        let g = verify_automorphism(&p, "g", m).unwrap();
        let mats = g.graded_matrices(&rs);
        for d in 0..=6 {
            for (k, w) in rs.normal_words(d).iter().enumerate() {
                let (_, direct) = rs.normal_form(&g.apply(&NcPoly::word(w))).unwrap();
                assert_eq!(mats[d][k], direct, "{w:?}");
            }
        }
        let swap = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        let s = verify_automorphism(&skew(), "s", swap).unwrap();
        assert_eq!(s.order(10).unwrap(), 2);
    }

    #[test]
    fn hdet_and_flag() {
        assert_eq!(hdet(&Poly::from_ints(&[1, -2, 1]), 2), c(1));
        assert_eq!(hdet(&Poly::from_ints(&[1, 0, -1]), 2), c(-1));
        let e = &Poly::from_ints(&[1, -1]).pow(2) * &Poly::from_ints(&[1, 1]);
        assert_eq!(hdet(&e, 3), c(-1));
        assert!(gorenstein_flag(&[c(1), c(1)]));
        assert!(!gorenstein_flag(&[c(1), c(-1)]));
    }

    #[test]
    fn matrix_files() {
        let text = "automorphism g on A\ni, 0\n0, -i\n\nautomorphism h on A\n-1, 0\n0, 1\n";
        let ms = parse_matrices(text).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0].matrix, diagonal(&[CycNumber::i(), -CycNumber::i()]));
        let again = parse_matrices(&format_matrix("g", "A", &ms[0].matrix)).unwrap();
        assert_eq!(again[0], ms[0]);
        assert!(matches!(
            parse_matrices("automorphism g on A\n1, 0\n0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
