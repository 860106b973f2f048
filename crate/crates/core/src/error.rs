use thiserror::Error;

/// Errors raised by the group, presentation and hypermap layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {0} occurs more than once")]
    RepeatedPoint(usize),
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("empty generator list")]
    NoGenerators,
    #[error("element is not in the group")]
    ElementNotInGroup,
    #[error("second group is not a subgroup of the first")]
    NotSubgroup,
    #[error("{what} of size {size} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("coset enumeration exceeded {0} live cosets")]
    CosetLimitExceeded(usize),
    #[error("presentation has no relators and the subgroup is trivial: the group is infinite")]
    EmptyPresentationDegenerate,
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("expected a two-generator presentation, found {0} generators")]
    NotTwoGenerator(usize),
    #[error("hypermaps are not orthogonal")]
    NotOrthogonal,
    #[error("operation images do not generate the monodromy group")]
    ImagesDoNotGenerate,
    #[error("minimal normal subgroup with self-dual quotient is not unique")]
    NonUniqueMinimum,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
