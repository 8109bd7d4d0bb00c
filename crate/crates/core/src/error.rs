use thiserror::Error;

/// Every failure mode of the library. Variant names double as the error
/// names reported by the command-line runner.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings: {0}")]
    RingMismatch(String),
    #[error("divisor does not divide the dividend exactly")]
    InexactDivision,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("polynomial is not expressible in Plücker coordinates: {0}")]
    NotLiftable(String),
    #[error("degree too small: {0}")]
    DegreeTooSmall(String),
    #[error("matrix rank too small: {0}")]
    RankTooSmall(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("elimination did not produce a hypersurface: {0}")]
    NotHypersurface(String),
    #[error("intersection points are not all rational: {0}")]
    NonRationalIntersection(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("simplicial complex is not pure")]
    NotPure,
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("Grassmannian parameters differ: {0}")]
    GrassmannianMismatch(String),
    #[error("limit fiber is not reduced: {0}")]
    NonreducedLimit(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("matroid has a loop at column {0}")]
    LoopPresent(usize),
    #[error("parameters out of range: {0}")]
    ParameterRange(String),
    #[error("predicted monomial factor does not divide: {0}")]
    InexactFactor(String),
    #[error("diagonal scaling has a zero entry")]
    ZeroScale,
    #[error("invalid input: {0}")]
    Validation(String),
}

impl Error {
    /// Stable name used in JSON error reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::RingMismatch(_) => "RingMismatch",
            Error::InexactDivision => "InexactDivision",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::ResourceLimit(_) => "ResourceLimit",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::NotLiftable(_) => "NotLiftable",
            Error::DegreeTooSmall(_) => "DegreeTooSmall",
            Error::RankTooSmall(_) => "RankTooSmall",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotHypersurface(_) => "NotHypersurface",
            Error::NonRationalIntersection(_) => "NonRationalIntersection",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotPure => "NotPure",
            Error::NotSquarefree => "NotSquarefree",
            Error::GrassmannianMismatch(_) => "GrassmannianMismatch",
            Error::NonreducedLimit(_) => "NonreducedLimit",
            Error::RankDeficient => "RankDeficient",
            Error::LoopPresent(_) => "LoopPresent",
            Error::ParameterRange(_) => "ParameterRange",
            Error::InexactFactor(_) => "InexactFactor",
            Error::ZeroScale => "ZeroScale",
            Error::Validation(_) => "Validation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
