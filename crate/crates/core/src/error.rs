use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{p} is not coprime to the conductor {conductor}")]
    NotCoprime { p: i64, conductor: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("series disagrees with 1/e at degree {degree}")]
    ReconstructionMismatch { degree: usize },
    #[error("numerator vanishes at t = 1 to higher order than the denominator")]
    NumeratorVanishesAtOne,
    #[error("Hilbert series mismatch at degree {degree}: expected {expected}, found {found}")]
    HilbertMismatch { degree: usize, expected: String, found: usize },
    #[error("relation {relation} is not preserved: image reduces to {image}")]
    NotAnAutomorphism { relation: String, image: String },
    #[error("matrix is not invertible")]
    NonInvertible,
    #[error("matrix is {rows}x{cols} but the algebra has {generators} degree-one generators")]
    DimensionMismatch { rows: usize, cols: usize, generators: usize },
    #[error("generator {0} does not have degree 1")]
    NotDegreeOne(String),
    #[error("automorphisms act on different presentations")]
    MixedPresentations,
    #[error("group closure exceeds the cap of {cap} elements")]
    ExceedsCap { cap: usize },
    #[error("root {residual} of the Euler polynomial is not a root of unity")]
    NonUnityRoot { residual: String },
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("Jacobi identity fails for basis elements {0}, {1}, {2}")]
    JacobiFailure(usize, usize, usize),
    #[error("structure constants are not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("degree cutoff {cutoff} is below {needed}")]
    CutoffTooLow { cutoff: usize, needed: usize },
    #[error("automorphism does not have finite order within {cap} powers")]
    InfiniteOrder { cap: usize },
    #[error("trace and matrix disagree: {0}")]
    ClassificationConflict(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("candidate set of {size} roots exceeds the limit {limit}")]
    CandidateSetOverflow { size: usize, limit: usize },
    #[error("vanishing blocks of size {size} need templates beyond pairs and triples")]
    UnsupportedTemplate { size: usize },
    #[error("conductor {conductor} exceeds the limit {limit}")]
    ConductorOverflow { conductor: u64, limit: u64 },
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
