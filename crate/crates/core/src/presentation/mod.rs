//! Finitely presented connected graded algebras.
//!
//! A [`Presentation`] lists named generators with positive degrees and
//! homogeneous relations in the free algebra. [`groebner_truncated`] completes
//! the relations up to a degree cutoff and yields a [`RewriteSystem`] whose
//! normal words give a basis of every graded piece through the cutoff.

mod constructors;
mod groebner;
mod normality;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNumber;
use crate::error::{Error, Result};
use crate::parse::{self, Domain};
use crate::series::FactoredRational;

pub use constructors::{
    down_up, homogenize_lie, ore_extension, polynomial_ring, quantum_plane, rees_weyl, Derivation,
    LieAlgebra,
};
pub use groebner::{groebner_truncated, Rule, RewriteSystem};
pub use normality::{normality_check, NormalityResult, Side};

/// Default degree cutoff for truncated computations.
pub const DEFAULT_CUTOFF: usize = 12;

/// A word in the generators, stored as generator indices.
pub type Word = Vec<u8>;

/// Degree-compatible well order on words.
///
/// Words are compared by weighted degree, then length, then lexicographically
/// with generators ranked by `priority` (first entry is the largest letter).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    rank: Vec<usize>,
}

impl MonomialOrder {
    /// Deglex with the generator order as given: x₀ > x₁ > ….
    pub fn deglex(n: usize) -> Self {
        MonomialOrder { rank: (0..n).collect() }
    }

    /// Deglex with generator `priority[0]` largest, `priority[1]` next, ….
    pub fn with_priority(priority: &[usize]) -> Result<Self> {
        let n = priority.len();
        let mut rank = vec![usize::MAX; n];
        for (r, &g) in priority.iter().enumerate() {
            if g >= n || rank[g] != usize::MAX {
                return Err(Error::Precondition("priority must be a permutation".into()));
            }
            rank[g] = r;
        }
        Ok(MonomialOrder { rank })
    }

    pub fn cmp(&self, degrees: &[u32], a: &[u8], b: &[u8]) -> std::cmp::Ordering {
        let wd = |w: &[u8]| w.iter().map(|&x| degrees[x as usize]).sum::<u32>();
        wd(a).cmp(&wd(b)).then(a.len().cmp(&b.len())).then_with(|| {
            for (x, y) in a.iter().zip(b) {
                if x != y {
                    // Smaller rank means larger letter.
                    return self.rank[*y as usize].cmp(&self.rank[*x as usize]);
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

/// Noncommutative polynomial: words with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NcPoly {
    terms: BTreeMap<Word, CycNumber>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: CycNumber) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn term(w: Word, c: CycNumber) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: &[u8]) -> Self {
        Self::term(w.to_vec(), CycNumber::one())
    }

    pub fn generator(j: usize) -> Self {
        Self::word(&[j as u8])
    }

    pub fn add_term(&mut self, w: Word, c: CycNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CycNumber)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        let mut p = Self::zero();
        for (w, a) in &self.terms {
            p.add_term(w.clone(), a * c);
        }
        p
    }

    pub fn as_scalar(&self) -> Option<CycNumber> {
        match self.terms.len() {
            0 => Some(CycNumber::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// The weighted degree, if every term has the same one.
    pub fn homogeneous_degree(&self, degrees: &[u32]) -> Option<u32> {
        let mut it = self
            .terms
            .keys()
            .map(|w| w.iter().map(|&x| degrees[x as usize]).sum::<u32>());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Substitutes `images[j]` for generator j.
    pub fn substitute(&self, images: &[NcPoly]) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let img = w
                .iter()
                .fold(NcPoly::constant(c.clone()), |acc, &x| &acc * &images[x as usize]);
            out = &out + &img;
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        NcDisplay { p: self, names }
    }
}

struct NcDisplay<'a> {
    p: &'a NcPoly,
    names: &'a [String],
}

impl fmt::Display for NcDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.p.terms.iter().enumerate() {
            let word: Vec<&str> = w.iter().map(|&x| self.names[x as usize].as_str()).collect();
            let word = word.join("*");
            let (neg, abs) = match c.as_rational() {
                Some(r) if num_traits::Signed::is_negative(&r) => (true, -c.clone()),
                _ => (false, c.clone()),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{}", crate::series::paren(&abs))?;
            } else if abs.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{}*{word}", crate::series::paren(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, o: &NcPoly) -> NcPoly {
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, o: &NcPoly) -> NcPoly {
        self + &(-o)
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(&CycNumber::from_integer(-1))
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, o: &NcPoly) -> NcPoly {
        let mut p = NcPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                p.add_term(w, x * y);
            }
        }
        p
    }
}

impl Domain for NcPoly {
    fn scalar(c: CycNumber) -> Self {
        NcPoly::constant(c)
    }
    fn add(a: Self, b: Self) -> Self {
        &a + &b
    }
    fn sub(a: Self, b: Self) -> Self {
        &a - &b
    }
    fn mul(a: Self, b: Self) -> Result<Self> {
        Ok(&a * &b)
    }
    fn div(a: Self, b: Self) -> Result<Self> {
        let s = b
            .as_scalar()
            .ok_or_else(|| Error::parse(0, "division by a non-scalar"))?;
        Ok(a.scale(&s.inverse()?))
    }
    fn neg(a: Self) -> Self {
        -&a
    }
}

/// Generators with degrees and homogeneous relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    names: Vec<String>,
    degrees: Vec<u32>,
    relations: Vec<NcPoly>,
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<(String, u32)>,
        relations: Vec<NcPoly>,
    ) -> Result<Self> {
        let (names, degrees): (Vec<String>, Vec<u32>) = generators.into_iter().unzip();
        if names.len() > u8::MAX as usize {
            return Err(Error::Precondition("too many generators".into()));
        }
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::Precondition(format!("duplicate generator {n}")));
            }
        }
        if degrees.contains(&0) {
            return Err(Error::Precondition("generator degrees must be positive".into()));
        }
        let p = Presentation { name: name.into(), names, degrees, relations: Vec::new() };
        let mut p = p;
        for r in relations {
            p.add_relation(r)?;
        }
        Ok(p)
    }

    /// Builds a presentation from relation strings in the coefficient grammar.
    pub fn parse(name: &str, generators: &[(&str, u32)], relations: &[&str]) -> Result<Self> {
        let mut p = Self::new(
            name,
            generators.iter().map(|&(n, d)| (n.to_string(), d)).collect(),
            Vec::new(),
        )?;
        for r in relations {
            let r = p.parse_element(r)?;
            p.add_relation(r)?;
        }
        Ok(p)
    }

    pub fn add_relation(&mut self, r: NcPoly) -> Result<()> {
        if r.is_zero() {
            return Ok(());
        }
        match r.homogeneous_degree(&self.degrees) {
            Some(d) if d > 0 => {
                self.relations.push(r);
                Ok(())
            }
            _ => Err(Error::Inhomogeneous(r.display(&self.names).to_string())),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn word_degree(&self, w: &[u8]) -> usize {
        w.iter().map(|&x| self.degrees[x as usize] as usize).sum()
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations
            .iter()
            .filter_map(|r| r.homogeneous_degree(&self.degrees))
            .max()
            .unwrap_or(0) as usize
    }

    /// Parses an element; identifiers are generator names, then `i`.
    pub fn parse_element(&self, s: &str) -> Result<NcPoly> {
        let e = parse::parse_expr(s)?;
        parse::eval(&e, &|name: &str| match self.generator_index(name) {
            Some(j) => Ok(NcPoly::generator(j)),
            None => parse::cyc_ident(name).map(NcPoly::constant),
        })
    }

    pub fn format(&self, p: &NcPoly) -> String {
        p.display(&self.names).to_string()
    }

    pub fn format_word(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<&str> = w.iter().map(|&x| self.names[x as usize].as_str()).collect();
        parts.join("*")
    }

    /// True when every generator has degree 1.
    pub fn degree_one_generated(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// Text form accepted by [`parse_algebra`].
    pub fn to_text(&self, profile: Option<&AlgebraProfile>) -> String {
        let mut s = format!("algebra {}\ngenerators", self.name);
        for (n, d) in self.names.iter().zip(&self.degrees) {
            s += &format!(" {n}:{d}");
        }
        s.push('\n');
        for r in &self.relations {
            s += &format!("relation {}\n", self.format(r));
        }
        if let Some(p) = profile {
            s += &format!("hilbert {}\ngldim {}\n", p.hilbert.to_expression(), p.gldim);
        }
        s
    }
}

/// Global dimension and Hilbert series assumed for an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraProfile {
    pub gldim: u32,
    pub hilbert: FactoredRational,
    pub gkdim: u32,
}

impl AlgebraProfile {
    pub fn new(gldim: u32, hilbert: FactoredRational) -> Self {
        let gkdim = hilbert.pole_order_at_one();
        AlgebraProfile { gldim, hilbert, gkdim }
    }

    /// Hilbert series 1/(1−t)^n, global dimension n.
    pub fn quantum_polynomial(n: u32) -> Self {
        Self::new(n, FactoredRational::polynomial_ring(n))
    }

    pub fn is_quantum_polynomial(&self) -> bool {
        self.hilbert.numerator.is_one()
            && self.hilbert.denom_factors.len() == 1
            && self.gkdim == self.gldim
    }

    /// e(t) with H = 1/e(t); requires numerator 1.
    pub fn euler_degree(&self) -> usize {
        self.hilbert.denominator_degree()
    }
}

/// A parsed algebra file.
#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub presentation: Presentation,
    pub profile: Option<AlgebraProfile>,
}

/// Reads the line format `algebra`, `generators x:1 …`, `relation …`,
/// optional `hilbert …` and `gldim n`. `#` starts a comment.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let mut name = None;
    let mut pres: Option<Presentation> = None;
    let mut hilbert = None;
    let mut gldim = None;
    let at = |line: usize| move |e: Error| match e {
        Error::Parse { message, .. } => Error::parse(line, message),
        other => Error::parse(line, other.to_string()),
    };
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match kw {
            "algebra" => name = Some(rest.to_string()),
            "generators" => {
                let mut gens = Vec::new();
                for tok in rest.split_whitespace() {
                    let (n, d) = tok.split_once(':').unwrap_or((tok, "1"));
                    let d: u32 = d
                        .parse()
                        .map_err(|_| Error::parse(line, format!("bad degree in {tok}")))?;
                    gens.push((n.to_string(), d));
                }
                let nm = name.clone().unwrap_or_else(|| "A".into());
                pres = Some(Presentation::new(nm, gens, Vec::new()).map_err(at(line))?);
            }
            "relation" => {
                let p = pres
                    .as_mut()
                    .ok_or_else(|| Error::parse(line, "relation before generators"))?;
                let r = p.parse_element(rest).map_err(at(line))?;
                p.add_relation(r).map_err(at(line))?;
            }
            "hilbert" => {
                let f = parse::parse_ratfunc(rest).map_err(at(line))?;
                hilbert = Some(FactoredRational::from_ratfunc(&f).map_err(at(line))?);
            }
            "gldim" => {
                gldim = Some(
                    rest.parse::<u32>()
                        .map_err(|_| Error::parse(line, "gldim must be a nonnegative integer"))?,
                )
            }
            other => return Err(Error::parse(line, format!("unknown keyword {other}"))),
        }
    }
    let presentation = pres.ok_or_else(|| Error::parse(0, "missing generators line"))?;
    let profile = hilbert.map(|h| {
        let d = gldim.unwrap_or(h.denominator_degree() as u32);
        AlgebraProfile::new(d, h)
    });
    if profile.is_none() && gldim.is_some() {
        return Err(Error::parse(0, "gldim given without hilbert"));
    }
    Ok(AlgebraFile { presentation, profile })
}

/// Normal words per degree and the resulting dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalBasis {
    pub words: Vec<Vec<Word>>,
    pub dims: Vec<usize>,
}

/// Computes dim A_0..A_D and compares them with the declared Hilbert series.
pub fn dims_and_verify(
    p: &Presentation,
    profile: &AlgebraProfile,
    cutoff: usize,
) -> Result<NormalBasis> {
    let rs = groebner_truncated(p, &MonomialOrder::deglex(p.num_generators()), cutoff)?;
    verify_dims(&rs, profile)?;
    Ok(rs.normal_basis())
}

/// Compares the normal-word counts of `rs` with `profile.hilbert`.
pub fn verify_dims(rs: &RewriteSystem, profile: &AlgebraProfile) -> Result<()> {
    let expected = profile.hilbert.expand(rs.cutoff());
    for (d, e) in expected.iter().enumerate() {
        let found = rs.dim(d);
        if *e != CycNumber::from_integer(found as i64) {
            return Err(Error::HilbertMismatch { degree: d, expected: e.to_string(), found });
        }
    }
    Ok(())
}
