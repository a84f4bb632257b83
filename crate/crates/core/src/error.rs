use thiserror::Error;

/// Errors raised by the library. CLI exit codes are derived from these in
/// [`crate::cli`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set needs at least 2 alternatives, got {0}")]
    TooFewAlternatives(usize),

    #[error("invalid alternative name `{0}`: names must be nonempty and free of whitespace, `,`, `[`, `]`, `>`")]
    InvalidAlternativeName(String),

    #[error("duplicate alternative name `{0}`")]
    DuplicateAlternative(String),

    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),

    #[error("ground set of size {size} exceeds the enumeration cap of {cap}")]
    GroundSetTooLarge { size: usize, cap: usize },

    #[error("objects are defined over different ground sets")]
    GroundMismatch,

    #[error("choice set {choice} is not a subset of menu {menu}")]
    ChoiceOutsideMenu { menu: String, choice: String },

    #[error("choice table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },

    #[error("empty menu must map to the empty choice set")]
    NonEmptyChoiceOfEmptyMenu,

    #[error("choice set of nonempty menu {0} is empty")]
    NotDecisive(String),

    #[error("choice behavior is not rationalizable")]
    NotRationalizable,

    #[error("{0} is not a subset of {1}")]
    NotASubset(String, String),

    #[error("base menu of a localization must be nonempty")]
    EmptyBaseMenu,

    #[error("relation precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid Ferrers parameters ({m},{n}): need m >= n >= 1")]
    InvalidFerrersParameters { m: usize, n: usize },

    #[error("infeasible weighting map: {0}")]
    InfeasibleWeightingMap(String),

    #[error("item {item} is not in menu {menu}")]
    ItemNotInMenu { item: String, menu: String },

    #[error("probability {value} for item {item} in menu {menu} is outside [0,1]")]
    ProbabilityOutOfRange {
        item: String,
        menu: String,
        value: String,
    },

    #[error("probabilities in menu {menu} sum to {sum}, expected 1")]
    ProbabilitySum { menu: String, sum: String },

    #[error("item {item} outside menu {menu} has nonzero probability")]
    ProbabilityOutsideMenu { item: String, menu: String },

    #[error("not a distribution over linear orders: {0}")]
    NotADistribution(String),

    #[error("not a bijection on the ground set: {0}")]
    NotABijection(String),

    #[error("invalid number `{0}`")]
    InvalidNumber(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
