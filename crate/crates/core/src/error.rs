use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring of size {size} exceeds the configured bound {bound}")]
    RingTooLarge { size: u128, bound: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("polynomial {0} is not monic of positive degree")]
    NotMonic(String),
    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("the zero ring has no maximal ideals")]
    ZeroRing,
    #[error("not in GL_{n}(S): determinant {det} is not a unit")]
    NotInvertible { n: usize, det: String },
    #[error("cap exceeded: {what} needs {needed} > cap {cap}")]
    CapExceeded { what: String, needed: u128, cap: u128 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("hypothesis (*) violated: no element has trace 1 (image of the trace: {image:?})")]
    NoTraceWitness { image: Vec<String> },
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("mismatched coefficients: {0}")]
    Mismatch(String),
    #[error("coefficients are not fixed by the normal subgroup")]
    NotFixed,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("scenario validation failed: {0}")]
    Validation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap_check(what: impl Into<String>, needed: u128, cap: u128) -> Result<()> {
    if needed > cap {
        Err(Error::CapExceeded { what: what.into(), needed, cap })
    } else {
        Ok(())
    }
}
