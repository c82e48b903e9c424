use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown node {0}")]
    UnknownNode(usize),
    #[error("invalid Dynkin diagram: {0}")]
    InvalidDiagram(String),
    #[error("diagram has an odd cycle, no bipartite coloring exists")]
    OddCycle,
    #[error("weight is not dominant")]
    NonDominant,
    #[error("diagram is not of finite type (positive root closure exceeded {0} roots)")]
    NotFiniteType(usize),

    #[error("monomial {0} is not below {1}")]
    NotComparable(String, String),
    #[error("monomial mixes spectral bases: {0}")]
    MixedBase(String),
    #[error("monomial {monomial} is not {node}-dominant")]
    NotIDominant { monomial: String, node: usize },
    #[error("monomial {0} is not l-dominant")]
    NotLDominant(String),
    #[error("character is not a combination of E_{node} blocks: maximal monomial {monomial} is not {node}-dominant")]
    NotDecomposable { monomial: String, node: usize },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("evaluation at t = {0} of a negative power is not integral")]
    NonIntegralEvaluation(i64),

    #[error("monomial {0} is not in the parity subset for any coloring")]
    NotInMPrime(String),
    #[error("vertex cap of {0} exceeded")]
    CapExceeded(usize),

    #[error("closure forces conflicting coefficients at {monomial}: {detail}")]
    Inconsistent { monomial: String, detail: String },
    #[error("l-dominant monomial {0} below the highest monomial; its coefficient is not determined")]
    LDominantEncountered(String),
    #[error("closure did not finish within {0} rounds")]
    IterationCap(usize),
    #[error("factor order violates the admissibility condition")]
    NoAdmissibleOrder,

    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
