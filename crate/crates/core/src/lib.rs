//! Exact invariant theory for connected graded algebras.
//!
//! Trace series of graded automorphisms, Molien series of finite groups,
//! quasi-reflection classification and the root-of-unity sums behind it.

pub mod algebra;
pub mod automorphism;
pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod invariants;
pub mod linalg;
pub mod parse;
pub mod presentation;
pub mod reflection;
pub mod rootsum;
pub mod series;

pub use cyclotomic::{CycNumber, Rational, RootOfUnity};
pub use error::{Error, Result};
pub use automorphism::{FiniteGroup, GradedAutomorphism, TraceFunction};
pub use presentation::{AlgebraProfile, NcPoly, Presentation, RewriteSystem};
pub use series::{FactoredRational, LaurentExpansion, Poly};
pub use algebra::Algebra;
pub use invariants::{GateOutcome, GateVerdict, MolienReport};
pub use reflection::{ClassificationReport, Kind};
pub use rootsum::{RootSumProblem, SolutionFamily};
