use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Variants fall into three families (see [`Error::class`]): input that could
/// not be parsed or resolved, input that parsed but is mathematically invalid,
/// and computations that ran into a configured size cap.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("io error: {0}")]
    Io(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("generators act on different numbers of points")]
    DegreeMismatch,
    #[error("extraspecial groups of exponent p need an odd prime, got {0}")]
    EvenPrime(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("images do not define a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("homomorphism is not injective")]
    NotInjective,
    #[error("elements do not form a subgroup of the ambient group")]
    NotASubgroup,
    #[error("domain is not a subgroup of the base group")]
    DomainNotSubgroup,
    #[error("group of order {0} is not a p-group")]
    NotAPrimePowerGroup(usize),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("value is not rational")]
    NotRational,
    #[error("value is not an algebraic integer")]
    NotIntegral,
    #[error("character is not constant on fusion classes")]
    NotInvariant,
    #[error("vector is not in the span of the basis")]
    NotInSpan,
    #[error("decomposition is not a non-negative integer combination: {0}")]
    DecompositionNotIntegral(String),
    #[error("completed relation has nonzero constant term: {0}")]
    NonzeroConstantTerm(String),
    #[error("lattices live in different ambient rings")]
    AmbientMismatch,
    #[error("subgroup is not central")]
    NotCentral,
    #[error("a fusion generator does not fix the central subgroup pointwise")]
    GeneratorMovesA,
    #[error("kernel of the projection is not the cyclic subgroup generated by the given element")]
    NotCyclicKernel,
    #[error("invalid section: {0}")]
    BadSection(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("quotient of the extended fusion system does not match the base fusion system: {0}")]
    QuotientMismatch(String),
    #[error("action matrices do not satisfy the ring relations")]
    RelationViolated,
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("group order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("subgroup enumeration exceeded cap {0}")]
    SubgroupEnumerationCapExceeded(usize),
    #[error("morphism closure exceeded cap {0}")]
    MorphismCapExceeded(usize),
    #[error("group order {0} exceeds the saturation cap {1}")]
    SaturationCapExceeded(usize, usize),
    #[error("Hilbert basis completion exceeded cap {0}")]
    HilbertCapExceeded(usize),
    #[error("adic exponent search exceeded cap {0}")]
    ExponentCapExceeded(usize),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Mathematical,
    Cap,
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Parse { .. }
            | UnknownName(_)
            | Io(_)
            | NotAPermutation(_)
            | DegreeMismatch
            | EvenPrime(_)
            | NotPrime(_)
            | NotAHomomorphism(_)
            | NotInjective
            | NotASubgroup
            | DomainNotSubgroup
            | NotAPrimePowerGroup(_)
            | Invalid(_) => ErrorClass::Input,
            OrderCapExceeded(_)
            | SubgroupEnumerationCapExceeded(_)
            | MorphismCapExceeded(_)
            | SaturationCapExceeded(..)
            | HilbertCapExceeded(_)
            | ExponentCapExceeded(_)
            | Overflow => ErrorClass::Cap,
            _ => ErrorClass::Mathematical,
        }
    }

    /// Exit code of the command line tool for this error.
    pub fn exit_code(&self) -> i32 {
        match self.class() {
            ErrorClass::Input => 1,
            ErrorClass::Mathematical => 2,
            ErrorClass::Cap => 3,
        }
    }
}
