use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("coefficient rings differ: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("{0} is not an odd prime")]
    BadModulus(u64),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("{0} has no square root of -1")]
    NoSqrtNegOne(String),
    #[error("nested Gaussian extensions are not supported")]
    NestedGaussian,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("coefficient {0} does not belong to {1}")]
    ForeignCoefficient(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("restriction to [{r},{s}] is out of bounds for [{r0},{s0},{n}]")]
    RestrictBounds { r: usize, s: usize, r0: usize, s0: usize, n: usize },
    #[error("at least two x variables are needed (r = {0})")]
    TooFewRows(usize),
    #[error("invalid formula json: {0}")]
    Json(String),
    #[error("fixture {0} failed verification")]
    BadFixture(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("r and s must be positive (got r = {0}, s = {1})")]
    NonPositive(usize, usize),
    #[error("no admissible n below the search cap 2^20")]
    CapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("classes live in different rings: {0} vs {1}")]
    SpecMismatch(String, String),
    #[error("the diagonal-power argument needs rho = 0 and epsilon = 0")]
    RhoEnabled,
    #[error("restriction requires source dimension {expected}, got {got}")]
    RestrictDimension { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("classes live on different quadrics: Q_{0} vs Q_{1}")]
    DimensionMismatch(usize, usize),
    #[error("index {index} out of range 0..={max}")]
    Range { index: usize, max: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("ambient projective space must have dimension at least 1")]
    ZeroAmbient,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("r, s and n must be positive, got [{0},{1},{2}]")]
    NonPositive(usize, usize, usize),
}
