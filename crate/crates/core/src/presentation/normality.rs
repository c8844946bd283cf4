use serde::{Deserialize, Serialize};

use super::{groebner_truncated, MonomialOrder, NcPoly, Presentation, RewriteSystem, Word};
use crate::error::{Error, Result};
use crate::linalg::{unit, Echelon};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `u·b` is not in `b·A`.
    LeftMultiple,
    /// `b·u` is not in `A·b`.
    RightMultiple,
}

/// Outcome of comparing `b·A_i` with `A_i·b` for every i up to the cutoff.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalityResult {
    /// The spans agree in every degree through the given one; nothing is claimed beyond it.
    VerifiedToDegree(usize),
    FailedAt { degree: usize, witness: Word, side: Side },
}

impl NormalityResult {
    pub fn is_verified(&self) -> bool {
        matches!(self, NormalityResult::VerifiedToDegree(_))
    }
}

/// Normality of a homogeneous element, semi-decided up to `cutoff`.
pub fn normality_check(p: &Presentation, element: &NcPoly, cutoff: usize) -> Result<NormalityResult> {
    let rs = groebner_truncated(p, &MonomialOrder::deglex(p.num_generators()), cutoff)?;
    rs.check_normal(element)
}

impl RewriteSystem {
    /// Normality of `element` through this system's cutoff.
    pub fn check_normal(&self, element: &NcPoly) -> Result<NormalityResult> {
        self.check_normal_to(element, self.cutoff())
    }

    /// Normality of `element` through degree `max_degree` (clamped to the cutoff).
    pub fn check_normal_to(&self, element: &NcPoly, max_degree: usize) -> Result<NormalityResult> {
        let top = max_degree.min(self.cutoff());
        let (d0, b) = self
            .normal_form(element)
            .ok_or_else(|| Error::Precondition("element must be homogeneous within the cutoff".into()))?;
        if b.is_empty() {
            return Err(Error::Precondition("element is zero in the algebra".into()));
        }
        for i in 0..=top.saturating_sub(d0) {
            let words = self.normal_words(i);
            let left: Vec<_> = words.iter().map(|u| self.mul_word(d0, &b, u)).collect();
            let right: Vec<_> = (0..words.len()).map(|k| self.mul(i, &unit(k), d0, &b)).collect();
            let mut el = Echelon::new();
            left.iter().for_each(|v| {
                el.insert(v);
            });
            let mut er = Echelon::new();
            right.iter().for_each(|v| {
                er.insert(v);
            });
            for (k, v) in right.iter().enumerate() {
                if !el.contains(v) {
                    return Ok(NormalityResult::FailedAt {
                        degree: d0 + i,
                        witness: words[k].clone(),
                        side: Side::LeftMultiple,
                    });
                }
            }
            for (k, v) in left.iter().enumerate() {
                if !er.contains(v) {
                    return Ok(NormalityResult::FailedAt {
                        degree: d0 + i,
                        witness: words[k].clone(),
                        side: Side::RightMultiple,
                    });
                }
            }
        }
        Ok(NormalityResult::VerifiedToDegree(top.max(d0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::rees_weyl;

    #[test]
    fn central_and_normal_elements() {
        let w = rees_weyl(1).unwrap();
        let z = w.parse_element("z").unwrap();
        assert_eq!(normality_check(&w, &z, 6).unwrap(), NormalityResult::VerifiedToDegree(6));
        let x = w.parse_element("x").unwrap();
        assert!(!normality_check(&w, &x, 6).unwrap().is_verified());

        // In k<x,y>/(x^2 - y^2), x is not normal but x^2 is central.
        let p = Presentation::parse("A", &[("x", 1), ("y", 1)], &["x*x - y*y"]).unwrap();
        let x2 = p.parse_element("x*x").unwrap();
        assert!(normality_check(&p, &x2, 7).unwrap().is_verified());
        let x = p.parse_element("x").unwrap();
        let r = normality_check(&p, &x, 7).unwrap();
        assert!(matches!(r, NormalityResult::FailedAt { degree: 2, .. }), "{r:?}");
    }
}
