//! Standard families of presentations.

use super::{NcPoly, Presentation};
use crate::automorphism::GradedAutomorphism;
use crate::cyclotomic::{CycNumber, Rational};
use crate::error::{Error, Result};

/// Images δ(x_j) of a σ-derivation on the generators; zero where absent.
#[derive(Clone, Debug, Default)]
pub struct Derivation {
    pub images: Vec<NcPoly>,
}

/// Adjoins `name` with `name·c = σ(c)·name + δ(c)` for every generator c.
pub fn ore_extension(
    p: &Presentation,
    sigma: &GradedAutomorphism,
    delta: Option<&Derivation>,
    name: &str,
    degree: u32,
) -> Result<Presentation> {
    if **sigma.presentation() != *p {
        return Err(Error::MixedPresentations);
    }
    let n = p.num_generators();
    let mut gens: Vec<(String, u32)> =
        p.names().iter().cloned().zip(p.degrees().iter().copied()).collect();
    gens.push((name.to_string(), degree));
    let mut out = Presentation::new(
        format!("{}[{name}]", p.name),
        gens,
        p.relations().to_vec(),
    )?;
    let b = NcPoly::generator(n);
    for c in 0..n {
        let x = NcPoly::generator(c);
        let mut r = &(&b * &x) - &(&sigma.image_of_generator(c) * &b);
        if let Some(d) = delta.and_then(|d| d.images.get(c)) {
            if !d.is_zero() && d.homogeneous_degree(p.degrees()) != Some(degree + p.degrees()[c]) {
                return Err(Error::Inhomogeneous(format!(
                    "delta({}) = {}",
                    p.names()[c],
                    p.format(d)
                )));
            }
            r = &r - d;
        }
        out.add_relation(r)?;
    }
    Ok(out)
}

/// k[x_1..x_n], all generators of degree 1.
pub fn polynomial_ring(n: usize) -> Result<Presentation> {
    let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
    let mut rels = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            rels.push(&NcPoly::word(&[a as u8, b as u8]) - &NcPoly::word(&[b as u8, a as u8]));
        }
    }
    Presentation::new(format!("k[{n}]"), names.into_iter().map(|s| (s, 1)).collect(), rels)
}

/// k_q[x, y]: x·y = q·y·x.
pub fn quantum_plane(q: &CycNumber) -> Result<Presentation> {
    let r = &NcPoly::word(&[0, 1]) - &NcPoly::word(&[1, 0]).scale(q);
    Presentation::new(format!("k_{q}[x,y]"), vec![("x".into(), 1), ("y".into(), 1)], vec![r])
}

/// Rees ring of the n-th Weyl algebra: x_i·y_i − y_i·x_i = z², all else commuting.
///
/// Generators are ordered x_1..x_n, y_1..y_n, z (named x, y, z when n = 1).
pub fn rees_weyl(n: usize) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::Precondition("rees_weyl needs n >= 1".into()));
    }
    let mut names: Vec<String> = Vec::new();
    if n == 1 {
        names.extend(["x".into(), "y".into()]);
    } else {
        names.extend((1..=n).map(|k| format!("x{k}")));
        names.extend((1..=n).map(|k| format!("y{k}")));
    }
    names.push("z".into());
    let z = 2 * n;
    let zz = NcPoly::word(&[z as u8, z as u8]);
    let mut rels = Vec::new();
    for a in 0..=z {
        for b in a + 1..=z {
            let comm = &NcPoly::word(&[a as u8, b as u8]) - &NcPoly::word(&[b as u8, a as u8]);
            rels.push(if b == a + n && a < n { &comm - &zz } else { comm });
        }
    }
    Presentation::new(format!("W{n}"), names.into_iter().map(|s| (s, 1)).collect(), rels)
}

/// Down-up algebra A(α, β, 0): d²u = α·dud + β·ud², du² = α·udu + β·u²d.
pub fn down_up(alpha: &CycNumber, beta: &CycNumber) -> Result<Presentation> {
    let (d, u) = (0u8, 1u8);
    let w = |s: &[u8]| NcPoly::word(s);
    let r1 = &(&w(&[d, d, u]) - &w(&[d, u, d]).scale(alpha)) - &w(&[u, d, d]).scale(beta);
    let r2 = &(&w(&[d, u, u]) - &w(&[u, d, u]).scale(alpha)) - &w(&[u, u, d]).scale(beta);
    Presentation::new(
        format!("A({alpha},{beta},0)"),
        vec![("d".into(), 1), ("u".into(), 1)],
        vec![r1, r2],
    )
}

/// A Lie algebra by structure constants: [b_i, b_j] = Σ_k c[i][j][k] b_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub names: Vec<String>,
    pub constants: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebra {
    pub fn new(names: &[&str]) -> Self {
        let n = names.len();
        LieAlgebra {
            names: names.iter().map(|s| s.to_string()).collect(),
            constants: vec![vec![vec![Rational::from_integer(0.into()); n]; n]; n],
        }
    }

    /// Sets [b_i, b_j] = Σ coeffs and [b_j, b_i] = −Σ coeffs.
    pub fn bracket(mut self, i: usize, j: usize, coeffs: &[(usize, i64)]) -> Self {
        for &(k, c) in coeffs {
            self.constants[i][j][k] = Rational::from_integer(c.into());
            self.constants[j][i][k] = Rational::from_integer((-c).into());
        }
        self
    }

    pub fn sl2() -> Self {
        // [e, f] = h, [h, e] = 2e, [h, f] = −2f
        LieAlgebra::new(&["e", "f", "h"])
            .bracket(0, 1, &[(2, 1)])
            .bracket(2, 0, &[(0, 2)])
            .bracket(2, 1, &[(1, -2)])
    }

    pub fn abelian(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|k| format!("b{k}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        LieAlgebra::new(&refs)
    }

    fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        let c = &self.constants;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if c[i][j][k] != -c[j][i][k].clone() {
                        return Err(Error::NotAntisymmetric(i, j));
                    }
                }
            }
        }
        // [[b_i,b_j],b_l] + [[b_j,b_l],b_i] + [[b_l,b_i],b_j] = 0
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let mut s = Rational::from_integer(0.into());
                        for k in 0..n {
                            s += &c[i][j][k] * &c[k][l][m];
                            s += &c[j][l][k] * &c[k][i][m];
                            s += &c[l][i][k] * &c[k][j][m];
                        }
                        if s != Rational::from_integer(0.into()) {
                            return Err(Error::JacobiFailure(i, j, l));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// H(𝔤): b_i·b_j − b_j·b_i = [b_i, b_j]·z with z central, generators b_1..b_n, z.
pub fn homogenize_lie(lie: &LieAlgebra) -> Result<Presentation> {
    lie.check()?;
    let n = lie.dim();
    let z = n as u8;
    let mut gens: Vec<(String, u32)> = lie.names.iter().map(|s| (s.clone(), 1)).collect();
    gens.push(("z".into(), 1));
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut r = &NcPoly::word(&[i as u8, j as u8]) - &NcPoly::word(&[j as u8, i as u8]);
            for k in 0..n {
                let c = CycNumber::from_rational(lie.constants[i][j][k].clone());
                r = &r - &NcPoly::word(&[k as u8, z]).scale(&c);
            }
            rels.push(r);
        }
    }
    for i in 0..n {
        rels.push(&NcPoly::word(&[i as u8, z]) - &NcPoly::word(&[z, i as u8]));
    }
    Presentation::new("H(g)", gens, rels)
}
