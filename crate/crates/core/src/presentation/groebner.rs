//! Degree-by-degree completion of homogeneous relations.
//!
//! At degree d the candidate words are `u·x` with `u` normal. Those free of any
//! lower leading word span the degree-d piece of the algebra defined by the
//! lower rules, once the overlaps of total degree d are divided out. The
//! degree-d relations and overlap differences are row reduced with the
//! largest word as pivot; pivots become new leading words.

use std::collections::HashMap;

use super::{MonomialOrder, NcPoly, Presentation, Word};
use crate::cyclotomic::CycNumber;
use crate::error::{Error, Result};
use crate::linalg::{axpy, unit, Echelon, SparseVec};

/// `lead → tail`, with the tail a combination of normal words of the same degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub degree: usize,
    pub tail: SparseVec,
}

#[derive(Clone, Debug, Default)]
struct Level {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `table[j][p]` = normal form of `words_{d - deg x_j}[p] · x_j`.
    table: Vec<Vec<SparseVec>>,
}

/// Truncated Gröbner basis with multiplication tables on normal words.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    degrees: Vec<u32>,
    order: MonomialOrder,
    cutoff: usize,
    levels: Vec<Level>,
    rules: Vec<Rule>,
    leads: HashMap<Word, usize>,
}

/// Completes the relations of `p` through degree `cutoff`.
pub fn groebner_truncated(
    p: &Presentation,
    order: &MonomialOrder,
    cutoff: usize,
) -> Result<RewriteSystem> {
    let needed = p.max_relation_degree();
    if cutoff < needed {
        return Err(Error::CutoffTooLow { cutoff, needed });
    }
    let degrees = p.degrees().to_vec();
    let n = degrees.len();
    let mut rs = RewriteSystem {
        degrees,
        order: order.clone(),
        cutoff,
        levels: Vec::with_capacity(cutoff + 1),
        rules: Vec::new(),
        leads: HashMap::new(),
    };
    let empty: Word = Vec::new();
    rs.levels.push(Level {
        words: vec![empty.clone()],
        index: HashMap::from([(empty, 0)]),
        table: vec![Vec::new(); n],
    });
    for d in 1..=cutoff {
        let rels: Vec<&NcPoly> = p
            .relations()
            .iter()
            .filter(|r| r.homogeneous_degree(p.degrees()) == Some(d as u32))
            .collect();
        rs.complete_degree(d, &rels);
    }
    Ok(rs)
}

/// Provisional multiplication into degree d, before the degree-d rules exist.
struct Provisional {
    lower: Vec<Word>,
    table: Vec<Vec<Option<SparseVec>>>,
}

impl RewriteSystem {
    fn word_degree(&self, w: &[u8]) -> usize {
        w.iter().map(|&x| self.degrees[x as usize] as usize).sum()
    }

    fn complete_degree(&mut self, d: usize, relations: &[&NcPoly]) {
        let n = self.degrees.len();
        // Candidate words u·x_j, u normal.
        let mut cands: Vec<(Word, usize, usize)> = Vec::new();
        for j in 0..n {
            let dj = self.degrees[j] as usize;
            if dj > d {
                continue;
            }
            for (pi, u) in self.levels[d - dj].words.iter().enumerate() {
                let mut w = u.clone();
                w.push(j as u8);
                cands.push((w, pi, j));
            }
        }
        let degs = self.degrees.clone();
        cands.sort_by(|a, b| self.order.cmp(&degs, &a.0, &b.0));

        let mut prov = Provisional {
            lower: Vec::new(),
            table: (0..n)
                .map(|j| {
                    let dj = self.degrees[j] as usize;
                    let len = if dj <= d { self.levels[d - dj].words.len() } else { 0 };
                    vec![None; len]
                })
                .collect(),
        };
        for (w, pi, j) in &cands {
            let hit = (0..w.len()).find_map(|s| self.leads.get(&w[s..]).map(|&r| (s, r)));
            let v = match hit {
                None => {
                    let k = prov.lower.len();
                    prov.lower.push(w.clone());
                    unit(k)
                }
                Some((s, r)) => {
                    let a = &w[..s];
                    let da = self.word_degree(a);
                    let ai = self.levels[da].index[a];
                    let rule = &self.rules[r];
                    let tail_words = &self.levels[rule.degree].words;
                    let mut acc = SparseVec::new();
                    for (vi, c) in &rule.tail {
                        let img = self.extend(&unit(ai), da, &tail_words[*vi], d, &prov);
                        axpy(&mut acc, c, &img);
                    }
                    acc
                }
            };
            prov.table[*j][*pi] = Some(v);
        }

        let mut ech = Echelon::new();
        for r in relations {
            let mut acc = SparseVec::new();
            for (w, c) in r.terms() {
                let img = self.extend(&unit(0), 0, w, d, &prov);
                axpy(&mut acc, c, &img);
            }
            ech.insert(&acc);
        }
        for s in self.overlaps(d) {
            ech.insert(&s.evaluate(self, d, &prov));
        }

        // Normal words are the non-pivot candidates.
        let mut remap = vec![usize::MAX; prov.lower.len()];
        let mut words = Vec::new();
        for (k, w) in prov.lower.iter().enumerate() {
            if !ech.is_pivot(k) {
                remap[k] = words.len();
                words.push(w.clone());
            }
        }
        let reindex = |v: &SparseVec| -> SparseVec {
            v.iter().map(|(k, c)| (remap[*k], c.clone())).collect()
        };
        let table = prov
            .table
            .iter()
            .map(|col| {
                col.iter()
                    .map(|v| reindex(&ech.reduce(v.as_ref().expect("filled"))))
                    .collect()
            })
            .collect();
        for (&pivot, row) in ech.rows() {
            let mut tail = SparseVec::new();
            for (k, c) in row {
                if *k != pivot {
                    tail.insert(remap[*k], -c.clone());
                }
            }
            let lead = prov.lower[pivot].clone();
            self.leads.insert(lead.clone(), self.rules.len());
            self.rules.push(Rule { lead, degree: d, tail });
        }
        let index = words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        self.levels.push(Level { words, index, table });
    }

    /// `v · letters` with `v` at degree `e`; the step landing in degree `d`
    /// uses the provisional table.
    fn extend(&self, v: &SparseVec, e: usize, letters: &[u8], d: usize, prov: &Provisional) -> SparseVec {
        let mut v = v.clone();
        let mut e = e;
        for &x in letters {
            let dx = self.degrees[x as usize] as usize;
            if e + dx == d {
                let mut out = SparseVec::new();
                for (k, c) in &v {
                    let img = prov.table[x as usize][*k].as_ref().expect("processed in order");
                    axpy(&mut out, c, img);
                }
                v = out;
            } else {
                v = self.mul_gen(e, &v, x as usize);
            }
            e += dx;
        }
        v
    }

    fn overlaps(&self, d: usize) -> Vec<Overlap> {
        let mut out = Vec::new();
        for (i1, r1) in self.rules.iter().enumerate() {
            for (i2, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lead, &r2.lead);
                for o in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - o..] != l2[..o] {
                        continue;
                    }
                    let deg = r1.degree + r2.degree - self.word_degree(&l2[..o]);
                    if deg == d {
                        out.push(Overlap { r1: i1, r2: i2, o });
                    }
                }
            }
        }
        out
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn dim(&self, d: usize) -> usize {
        self.levels.get(d).map_or(0, |l| l.words.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.words.len()).collect()
    }

    pub fn normal_words(&self, d: usize) -> &[Word] {
        &self.levels[d].words
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.levels.get(self.word_degree(w))?.index.get(w).copied()
    }

    pub fn normal_basis(&self) -> super::NormalBasis {
        super::NormalBasis {
            words: self.levels.iter().map(|l| l.words.clone()).collect(),
            dims: self.dims(),
        }
    }

    /// `v · x_j` for `v` in degree `d`.
    pub fn mul_gen(&self, d: usize, v: &SparseVec, j: usize) -> SparseVec {
        let tab = &self.levels[d + self.degrees[j] as usize].table[j];
        let mut out = SparseVec::new();
        for (k, c) in v {
            axpy(&mut out, c, &tab[*k]);
        }
        out
    }

    /// `v · w` for `v` in degree `d` and a word `w`.
    pub fn mul_word(&self, d: usize, v: &SparseVec, w: &[u8]) -> SparseVec {
        let mut v = v.clone();
        let mut e = d;
        for &x in w {
            v = self.mul_gen(e, &v, x as usize);
            e += self.degrees[x as usize] as usize;
        }
        v
    }

    /// `v · q` for `v` in degree `d` and a homogeneous `q`.
    pub fn mul_poly(&self, d: usize, v: &SparseVec, q: &NcPoly) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in q.terms() {
            axpy(&mut out, c, &self.mul_word(d, v, w));
        }
        out
    }

    /// Product of two elements given in normal coordinates.
    pub fn mul(&self, d1: usize, a: &SparseVec, d2: usize, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, c) in b {
            axpy(&mut out, c, &self.mul_word(d1, a, &self.levels[d2].words[*k]));
        }
        out
    }

    /// Normal form of a word, as coordinates on the normal words of its degree.
    pub fn normal_form_word(&self, w: &[u8]) -> SparseVec {
        self.mul_word(0, &unit(0), w)
    }

    /// Normal form of a homogeneous element; `None` past the cutoff.
    pub fn normal_form(&self, p: &NcPoly) -> Option<(usize, SparseVec)> {
        let d = p.homogeneous_degree(&self.degrees).unwrap_or(0) as usize;
        if d > self.cutoff || (!p.is_zero() && p.homogeneous_degree(&self.degrees).is_none()) {
            return None;
        }
        Some((d, self.mul_poly(0, &unit(0), p)))
    }

    pub fn to_ncpoly(&self, d: usize, v: &SparseVec) -> NcPoly {
        let mut p = NcPoly::zero();
        for (k, c) in v {
            p.add_term(self.levels[d].words[*k].clone(), c.clone());
        }
        p
    }

    /// Whether `w` contains a leading word (and so is not normal).
    pub fn is_reducible(&self, w: &[u8]) -> bool {
        (0..w.len()).any(|s| (s + 1..=w.len()).any(|e| self.leads.contains_key(&w[s..e])))
    }
}

/// `t1·b − a·t2` for leading words `l1 = a·o`, `l2 = o·b`.
struct Overlap {
    r1: usize,
    r2: usize,
    o: usize,
}

impl Overlap {
    fn evaluate(&self, rs: &RewriteSystem, d: usize, prov: &Provisional) -> SparseVec {
        let (r1, r2) = (&rs.rules[self.r1], &rs.rules[self.r2]);
        let a = &r1.lead[..r1.lead.len() - self.o];
        let b = &r2.lead[self.o..];
        let mut s = rs.extend(&r1.tail, r1.degree, b, d, prov);
        let da = rs.word_degree(a);
        let ai = rs.levels[da].index[a];
        let tail_words = &rs.levels[r2.degree].words;
        let minus_one = CycNumber::from_integer(-1);
        for (vi, c) in &r2.tail {
            let img = rs.extend(&unit(ai), da, &tail_words[*vi], d, prov);
            axpy(&mut s, &(c * &minus_one), &img);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(gens: &[(&str, u32)], rels: &[&str], d: usize) -> (Presentation, RewriteSystem) {
        let p = Presentation::parse("A", gens, rels).unwrap();
        let rs = groebner_truncated(&p, &MonomialOrder::deglex(gens.len()), d).unwrap();
        (p, rs)
    }

    fn names(p: &Presentation, rs: &RewriteSystem, d: usize) -> Vec<String> {
        rs.normal_words(d).iter().map(|w| p.format_word(w)).collect()
    }

    #[test]
    fn skew_plane_basis() {
        let (p, rs) = sys(&[("x", 1), ("y", 1)], &["x*x - y*y"], 8);
        assert_eq!(rs.dims(), (1..=9).collect::<Vec<_>>());
        let mut w2 = names(&p, &rs, 2);
        w2.sort();
        assert_eq!(w2, ["x*y", "y*x", "y*y"]);
        assert_eq!(rs.rules()[0].lead, vec![0, 0]);
        // The overlap x·x·x yields x·y·y → y·y·x in degree 3.
        let mut w3 = names(&p, &rs, 3);
        w3.sort();
        assert_eq!(w3, ["x*y*x", "y*x*y", "y*y*x", "y*y*y"]);
        assert_eq!(rs.rules()[1].lead, vec![0, 1, 1]);
    }

    #[test]
    fn commutative_plane() {
        let (_, rs) = sys(&[("x", 1), ("y", 1)], &["x*y - y*x"], 6);
        for d in 0..=6 {
            for w in rs.normal_words(d) {
                // y^a x^b: no x before y.
                assert!(!w.windows(2).any(|p| p == [0, 1]), "{w:?}");
            }
        }
        assert_eq!(rs.dim(6), 7);
    }

    #[test]
    fn free_algebra_is_fixed() {
        let (_, rs) = sys(&[("x", 1), ("y", 1)], &[], 5);
        assert_eq!(rs.dim(5), 32);
        let w = vec![1, 0, 0, 1, 0];
        assert_eq!(rs.normal_form_word(&w), unit(rs.index_of(&w).unwrap()));
    }

    #[test]
    fn cubic_overlaps_resolve() {
        // sl2 homogenised: the first genuine overlaps appear in degree 3.
        let (_, rs) = sys(
            &[("e", 1), ("f", 1), ("h", 1), ("z", 1)],
            &[
                "e*f - f*e - h*z",
                "h*e - e*h - 2*e*z",
                "h*f - f*h + 2*f*z",
                "e*z - z*e",
                "f*z - z*f",
                "h*z - z*h",
            ],
            7,
        );
        let want: Vec<usize> = (0..=7).map(|d| (d + 1) * (d + 2) * (d + 3) / 6).collect();
        assert_eq!(rs.dims(), want);
    }

    #[test]
    fn weighted_generators() {
        // k[x] ⊗ k[w] with deg w = 2.
        let (_, rs) = sys(&[("x", 1), ("w", 2)], &["x*w - w*x"], 8);
        let want: Vec<usize> = (0..=8).map(|d| d / 2 + 1).collect();
        assert_eq!(rs.dims(), want);
    }

    #[test]
    fn cutoff_below_relations() {
        let p = Presentation::parse("A", &[("x", 1)], &["x*x*x"]).unwrap();
        assert!(matches!(
            groebner_truncated(&p, &MonomialOrder::deglex(1), 2),
            Err(Error::CutoffTooLow { cutoff: 2, needed: 3 })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn normal_form_is_idempotent(w in prop::collection::vec(0u8..4, 0..7)) {
            let p = Presentation::parse(
                "A",
                &[("b1", 1), ("b2", 1), ("b3", 1), ("b4", 1)],
                &["b1*b1 - b2*b2", "b1*b3 + b3*b1", "b2*b3 - b3*b2", "b1*b4 + b4*b1",
                  "b2*b4 - b4*b2", "b3*b4 - b4*b3 - b1*b2 - b2*b1"],
            ).unwrap();
            let rs = groebner_truncated(&p, &MonomialOrder::deglex(4), 6).unwrap();
            let v = rs.normal_form_word(&w);
            let back = rs.to_ncpoly(w.len(), &v);
            let (_, again) = rs.normal_form(&back).unwrap();
            prop_assert_eq!(again, v);
            for (u, _) in back.terms() {
                prop_assert!(!rs.is_reducible(u));
            }
        }

        #[test]
        fn adding_relations_never_grows(extra in prop::collection::vec((0u8..3, 0u8..3, -2i64..3), 1..3)) {
            let base = ["x*y - y*x"];
            let gens = [("x", 1), ("y", 1), ("z", 1)];
            let p = Presentation::parse("A", &gens, &base).unwrap();
            let mut q = p.clone();
            for (a, b, c) in extra {
                let r = &NcPoly::word(&[a, b]) - &NcPoly::word(&[b, a]).scale(&CycNumber::from_integer(c));
                q.add_relation(r).unwrap();
            }
            let o = MonomialOrder::deglex(3);
            let r1 = groebner_truncated(&p, &o, 5).unwrap();
            let r2 = groebner_truncated(&q, &o, 5).unwrap();
            for d in 0..=5 {
                prop_assert!(r2.dim(d) <= r1.dim(d));
            }
        }
    }
}
