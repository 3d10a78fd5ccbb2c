use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0:?} is not a partition (parts must be weakly decreasing)")]
    NotPartition(Vec<usize>),

    #[error("{0:?} is not a strict partition")]
    NotStrict(Vec<usize>),

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot parse {0:?}")]
    Parse(String),

    #[error("row {row} has {got} entries but the shape needs {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("letter {letter} outside the alphabet 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("operator index {i} out of range for rank {n}")]
    IndexOutOfRange { i: usize, n: usize },

    #[error("word set is not closed under the crystal operators: {0}")]
    NotClosed(String),

    #[error("growth step {step} leaves the admissible chamber (row {row})")]
    Growth { step: usize, row: usize },

    #[error("polynomial is not symmetric: monomial {0:?} has no matching swap")]
    NotSymmetric(Vec<u32>),

    #[error("leading exponent {0:?} does not index a basis element")]
    InvalidLeading(Vec<u32>),

    #[error("independent models disagree: {0}")]
    ModelMismatch(String),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
