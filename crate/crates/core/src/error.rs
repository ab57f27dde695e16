use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground size {n} exceeds the guard limit {limit}")]
    GuardLimit { n: usize, limit: usize },
    #[error("ground sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("element {element} is outside the ground set of size {n}")]
    OutOfRange { element: i64, n: usize },
    #[error("set contains both {0} and -{0}")]
    Inadmissible(usize),
    #[error("feasible set has {found} elements, expected {expected}")]
    WrongSetSize { expected: usize, found: usize },
    #[error("the feasible family is empty")]
    EmptyFamily,
    #[error("signed map is not a permutation of the index pairs")]
    NotAPermutation,
    #[error("index {0} appears in more than one minor operation")]
    OverlappingMinor(usize),
    #[error("rank table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("rank table violates axiom: {0}")]
    AxiomFailure(String),
    #[error("normalized function must vanish at the empty set")]
    NotNormalized,
    #[error("set is not independent in the delta-matroid")]
    NotIndependent,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("vector has dimension {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("matroid basis family is empty")]
    EmptyBasisFamily,
    #[error("matroid bases have different sizes")]
    UnequalBases,
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("matroid has rank {found}, expected {expected}")]
    MatroidRank { expected: usize, found: usize },
    #[error("operation requires a matroid on {0}")]
    WrongGround(&'static str),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("negative exponent {0}")]
    NegativePower(i64),
    #[error("exponent exceeds 255")]
    DegreeOverflow,
    #[error("polynomial still depends on `{0}` after fixing")]
    ResidualVariable(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("coefficient sequence has length {found}, expected {expected}")]
    SequenceLength { expected: usize, found: usize },
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
    #[error("activity-zero sets are not downward closed")]
    NotAComplex,
}
