use thiserror::Error;

/// Errors raised by tree arithmetic, the permutation engine and the analyses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid vertex: digit {digit} at position {position} out of range for degree {degree}")]
    InvalidVertex {
        digit: u32,
        position: usize,
        degree: u32,
    },

    #[error("invalid index {index} for level {level} (level has {size} vertices)")]
    InvalidIndex {
        index: u128,
        level: usize,
        size: String,
    },

    #[error("degree sequence entry {value} at level {level} is below 2")]
    DegreeTooSmall { value: u32, level: usize },

    #[error("degree sequence must not be empty")]
    EmptyDegreeSequence,

    #[error("degree sequences do not match")]
    DegreeMismatch,

    #[error("automaton states require a constant degree sequence")]
    NonConstantAlphabet,

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("permutations act on different point counts ({0} vs {1})")]
    PointCountMismatch(usize, usize),

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("{0} is not a subgroup of {1}: generator {2} fails membership")]
    NotASubgroup(String, String, String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("level {level} has {size} vertices, exceeding the point budget {budget}")]
    PointBudgetExceeded {
        level: usize,
        size: String,
        budget: usize,
    },

    #[error("enumeration budget of {0} elements exceeded")]
    EnumerationBudget(usize),

    #[error("intersection search budget of {0} nodes exceeded")]
    IntersectionBudget(usize),

    #[error("subgroup is not normal at level {level}: conjugate of generator {generator} by {conjugator} escapes the subgroup")]
    NotNormal {
        level: usize,
        generator: String,
        conjugator: String,
    },

    #[error("element {element} does not lie in the level-{level} quotient")]
    ElementOutsideQuotient { element: String, level: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("unknown subgroup `{0}`")]
    UnknownSubgroup(String),

    #[error("{0}")]
    Invalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
