//! Exact linear algebra over [`CycNumber`]: sparse echelon forms and small dense matrices.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNumber;

/// Sparse vector keyed by basis index; zero entries are never stored.
pub type SparseVec = BTreeMap<usize, CycNumber>;

/// y += a·x
pub fn axpy(y: &mut SparseVec, a: &CycNumber, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let term = a * v;
        match y.get_mut(k) {
            Some(e) => {
                *e += &term;
                if e.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                if !term.is_zero() {
                    y.insert(*k, term);
                }
            }
        }
    }
}

pub fn scale(x: &SparseVec, a: &CycNumber) -> SparseVec {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(k, v)| (*k, v * a)).collect()
}

pub fn unit(k: usize) -> SparseVec {
    SparseVec::from([(k, CycNumber::one())])
}

/// Reduced row echelon form, grown one vector at a time.
///
/// The pivot of a row is its largest index; every row has pivot coefficient 1
/// and no other row has a nonzero entry in its pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    pub fn is_pivot(&self, k: usize) -> bool {
        self.rows.contains_key(&k)
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut upper: Option<usize> = None;
        loop {
            let next = match upper {
                None => v.iter().next_back(),
                Some(u) => v.range(..u).next_back(),
            };
            let Some((&k, c)) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                let c = -c.clone();
                axpy(&mut v, &c, row);
            }
            upper = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next_back() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero pivot");
        let r = scale(&r, &inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &(-c), &r);
            }
        }
        self.rows.insert(p, r);
        true
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// Dense square or rectangular matrix, row-major.
pub type Matrix = Vec<Vec<CycNumber>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| CycNumber::from_integer((i == j) as i64)).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b.iter())
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, brow)| x * &brow[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn mat_sub_scalar(a: &Matrix, z: &CycNumber) -> Matrix {
    a.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { x - z } else { x.clone() })
                .collect()
        })
        .collect()
}

fn row_to_sparse(row: &[CycNumber]) -> SparseVec {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

pub fn rank(a: &Matrix) -> usize {
    let rows: Vec<SparseVec> = a.iter().map(|r| row_to_sparse(r)).collect();
    rank_of(rows.iter())
}

/// Basis of { v : A v = 0 }.
pub fn kernel(a: &Matrix) -> Vec<Vec<CycNumber>> {
    let n = a.first().map_or(0, |r| r.len());
    let mut e = Echelon::new();
    for r in a {
        e.insert(&row_to_sparse(r));
    }
    // Each row reads x_p = -Σ_{j<p} c_j x_j with p the pivot; free columns parametrise.
    let free: Vec<usize> = (0..n).filter(|&j| !e.is_pivot(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycNumber::zero(); n];
            v[f] = CycNumber::one();
            for (&p, row) in e.rows() {
                if let Some(c) = row.get(&f) {
                    v[p] = -c.clone();
                }
            }
            v
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[CycNumber]) -> Vec<CycNumber> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn is_identity(a: &Matrix) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| CycNumber::from_integer(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(|x| x.is_zero()));
        assert_eq!(kernel(&identity(3)).len(), 0);
        assert_eq!(kernel(&m(&[&[0, 0], &[0, 0]])).len(), 2);
    }

    #[test]
    fn echelon_is_fully_reduced() {
        let mut e = Echelon::new();
        e.insert(&SparseVec::from([(0, CycNumber::one()), (1, CycNumber::one())]));
        e.insert(&SparseVec::from([(0, CycNumber::one())]));
        let row1 = e.rows().find(|(&p, _)| p == 1).unwrap().1;
        assert_eq!(row1.len(), 1);
        assert!(e.contains(&SparseVec::from([(1, CycNumber::from_integer(5))])));
        assert!(!e.contains(&unit(2)));
    }

    #[test]
    fn complex_kernel() {
        // diag(i, -i) - i·I has kernel spanned by e_0.
        let i = CycNumber::i();
        let a = vec![
            vec![i.clone(), CycNumber::zero()],
            vec![CycNumber::zero(), -i.clone()],
        ];
        let k = kernel(&mat_sub_scalar(&a, &i));
        assert_eq!(k, vec![vec![CycNumber::one(), CycNumber::zero()]]);
    }
}
