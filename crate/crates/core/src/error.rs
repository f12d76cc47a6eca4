use crate::laurent::{ExponentVector, Ring};
use crate::cover::LiftViolation;

/// Position-tagged failure from the expression parser.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos} for ring {ring}")]
    UnknownVariable { name: String, pos: usize, ring: Ring },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::UnknownVariable { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("ring signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Ring, right: Ring },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("valuation of the zero polynomial is undefined")]
    UndefinedValuation,
    #[error("operation needs a univariate ring, got {0}")]
    NotUnivariate(Ring),
    #[error("{0} is not a polynomial (has negative exponents)")]
    NotPolynomial(String),
    #[error("variable index {index} out of range for ring {ring}")]
    BadVariable { index: usize, ring: Ring },
    #[error("ring homomorphism image for variable {0} is not a unit monomial")]
    NonUnitImage(usize),
    #[error("cannot raise a non-monomial to a negative power")]
    NonInvertible,
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("genus must be at least 2, got {0}")]
    BadGenus(u32),
    #[error("invalid epsilon table: {0}")]
    InvalidEpsilon(String),
    #[error("exponent vector {got} has the wrong length for genus {genus}")]
    BadExponent { got: ExponentVector, genus: u32 },
    #[error("lift fails the self-intersection identity: {0}")]
    InvalidLift(LiftViolation),
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("matrix is singular")]
    Singular,
    #[error("vertices are not adjacent (distance {0})")]
    NotAdjacent(u64),
    #[error("not in balanced H-form: {0} unbalanced")]
    NotBalancedForm(String),
    #[error("not in SL2(Q[t]): entry {0} is not a polynomial")]
    OutsideA(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
