use alloc::string::String;

/// Errors from permutation construction and cycle-notation parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("permutation degree must be at least 1")]
    EmptyDegree,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image array is not a bijection")]
    NotBijection,
    #[error("point {point} out of range 1..{degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("repeated point {point}")]
    RepeatedPoint { point: usize },
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),

    // group engine
    #[error("cap exceeded: {partial} found before reaching the cap of {cap}")]
    CapExceeded { partial: usize, cap: usize },
    #[error("generator list is empty")]
    NoGenerators,
    #[error("not an element of the group: {0}")]
    NotAnElement(String),
    #[error("not a subgroup of the group")]
    NotASubgroup,
    #[error("subgroup orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("{m} does not divide the group order {order}")]
    NotADivisor { m: usize, order: usize },
    #[error("unknown group `{name}`; catalog: {catalog}")]
    UnknownGroup { name: String, catalog: String },
    #[error("unknown subgroup `{name}`; available: {available}")]
    UnknownSubgroup { name: String, available: String },
    #[error("G-sets belong to different groups")]
    DifferentGroups,

    // structure analysis
    #[error("action is not transitive")]
    Intransitive,
    #[error("action is not primitive")]
    Imprimitive,
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("cycle length {len} outside (1, {degree})")]
    CycleLengthOutOfRange { len: usize, degree: usize },
    #[error("point {0} is not fixed")]
    PointNotFixed(u32),
    #[error("degree {0} is not prime")]
    NotPrimeDegree(usize),
    #[error("no element acts as a {0}-cycle")]
    NoEllCycle(u32),
    #[error("nontrivial orbits of the normal closure have unequal sizes")]
    UnequalOrbits,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistency: {0}")]
    Inconsistent(String),

    // gassmann
    #[error("no element acts as a point involution")]
    NoPointInvolution,
    #[error("G-sets are not Gassmann equivalent")]
    NotGassmannEquivalent,
    #[error("{0} is not prime")]
    NotPrime(u64),

    // arithmetic
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("polynomial parse error at `{token}`: {reason}")]
    PolyParse { token: String, reason: String },
    #[error("prime {0} too large for single-word arithmetic")]
    PrimeTooLarge(u64),
}

pub type Result<T> = core::result::Result<T, Error>;
