//! An algebra bundled with its profile and a truncated rewriting system.

use std::sync::Arc;

use crate::automorphism::{trace_series, verify_automorphism, GradedAutomorphism, TraceFunction};
use crate::cyclotomic::CycNumber;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::presentation::{
    groebner_truncated, verify_dims, AlgebraProfile, MonomialOrder, Presentation, RewriteSystem,
};

#[derive(Clone, Debug)]
pub struct Algebra {
    pub presentation: Arc<Presentation>,
    pub profile: AlgebraProfile,
    pub rs: Arc<RewriteSystem>,
}

impl Algebra {
    /// Completes `p` to degree `cutoff` and checks its dimensions against `profile`.
    pub fn new(p: Presentation, profile: AlgebraProfile, cutoff: usize) -> Result<Self> {
        let rs = groebner_truncated(&p, &MonomialOrder::deglex(p.num_generators()), cutoff)?;
        verify_dims(&rs, &profile)?;
        Ok(Algebra { presentation: Arc::new(p), profile, rs: Arc::new(rs) })
    }

    /// Same as [`Algebra::new`] with Hilbert series 1/(1−t)^n, n the number of generators.
    pub fn quantum_polynomial(p: Presentation, cutoff: usize) -> Result<Self> {
        let n = p.num_generators() as u32;
        Self::new(p, AlgebraProfile::quantum_polynomial(n), cutoff)
    }

    pub fn cutoff(&self) -> usize {
        self.rs.cutoff()
    }

    /// Number of degree-one generators.
    pub fn dim_one(&self) -> usize {
        self.presentation.num_generators()
    }

    pub fn automorphism(&self, name: &str, m: Matrix) -> Result<GradedAutomorphism> {
        verify_automorphism(&self.presentation, name, m)
    }

    pub fn trace(&self, g: &GradedAutomorphism) -> Vec<CycNumber> {
        trace_series(&self.rs, g)
    }

    pub fn trace_function(&self, g: &GradedAutomorphism, order: Option<u64>) -> Result<TraceFunction> {
        TraceFunction::compute(&self.profile, self.trace(g), order)
    }
}
