use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition literal {0:?}")]
    BadPartition(String),
    #[error("invalid sign string {0:?}: {1}")]
    BadSigns(String, String),
    #[error("partition {0} is not orthogonal: even part {1} has odd multiplicity")]
    NotOrthogonal(String, u32),
    #[error("size mismatch: {0}")]
    Size(String),
    #[error("sequences have incomparable tails")]
    IncomparableTails,
    #[error("order word {0:?} does not index the bipartition ({1})")]
    OrderTooShort(String, String),
    #[error("procedure ({0}) needs a nonzero {1} in the minimal representative")]
    EmptyProcedure(char, &'static str),
    #[error("bipartition ({0}) is not in H at defect {1}")]
    NotInH(String, i64),
    #[error("arity or parity violation: {0}")]
    Parity(String),
    #[error("no datum maps to ({0}) at defect {1}")]
    NotInImage(String, i64),
    #[error("partition {0} has an even part; this operation needs only odd parts")]
    EvenPart(String),
    #[error("defect {0} is outside {{0, 1}}")]
    DefectOutOfRange(i64),
    #[error("partition {0} has no odd parts")]
    EmptyOddCore(String),
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
