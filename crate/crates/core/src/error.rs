use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is not irreducible over Z_p")]
    NotIrreducible(Vec<u32>),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("field size {p}^{n} exceeds the supported width (q <= 2^31)")]
    Overflow { p: u64, n: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{d} does not divide {modulus}")]
    NotADivisor { d: u64, modulus: u64 },
    #[error("element encoding {0} is out of range for this field")]
    ElementOutOfRange(u64),
    #[error("polynomial has a nonzero constant term")]
    HasConstantTerm,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("field of size {q} exceeds the exhaustive-evaluation cap {cap}")]
    FieldTooLarge { q: u64, cap: u64 },
    #[error("polynomial does not permute the field")]
    NotAPermutation,
    #[error("r^2 = {r}^2 is not congruent to 1 mod s = {s}")]
    RSquareCondition { r: u64, s: u64 },
    #[error("element {0} is not in the subgroup mu_{1}")]
    NotInSubgroup(u32, u64),
    #[error("g(x) = x^r h(x)^s is not an involution on mu_d: {0}")]
    NotInvolutionOnSubgroup(String),
    #[error("precondition violated: {}", .0.join("; "))]
    PreconditionViolated(Vec<String>),
    #[error("construction requires odd characteristic")]
    EvenCharacteristic,
    #[error("characteristic {p} divides the denominator {den}")]
    CharacteristicDividesD { p: u64, den: u64 },
    #[error("wrong field shape: {0}")]
    WrongFieldShape(String),
    #[error("h vanishes at subgroup element with encoding {0}")]
    HValueZero(u32),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("q is even: there is no a in F_(q^2) making h root-free on mu_(q+1)")]
    EvenQNoSolution,
    #[error("base map g is not an involution on the base field (witness x = {0})")]
    BaseNotInvolution(u32),
    #[error("hypothesis violated: {which}{}", .witness.map(|w| format!(" (witness {w})")).unwrap_or_default())]
    HypothesisViolated { which: String, witness: Option<u32> },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(vec![msg.into()])
    }
}
