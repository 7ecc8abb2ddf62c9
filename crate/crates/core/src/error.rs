use thiserror::Error;

use crate::tableau::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Ferrers diagram: {0}")]
    InvalidShape(String),

    #[error("semiperimeter must be at least 2, got {0}")]
    SemiperimeterTooSmall(usize),

    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("vertex {vertex} is not a non-sink vertex of a graph on 0..={n}")]
    NoSuchVertex { vertex: usize, n: usize },

    #[error("vertex {vertex} is stable (height {height} < degree {degree}) and cannot topple")]
    StableVertex { vertex: usize, height: u32, degree: usize },

    #[error("configuration is unstable at vertex {vertex}")]
    Unstable { vertex: usize },

    #[error("configuration is not recurrent")]
    NotRecurrent,

    #[error("configuration is recurrent but not minimal recurrent")]
    NotMinimal,

    #[error("no minimal recurrent configuration lies below the input")]
    NoMinimalBelow,

    #[error("invalid EW-tableau: {}", render_violations(.0))]
    InvalidTableau(Vec<Violation>),

    #[error("cell ({row}, {col}) lies inside the diagram")]
    CellInsideShape { row: usize, col: usize },

    #[error("label {0} is not a row label of the diagram")]
    NotARow(usize),

    #[error("label {0} is not a column label of the diagram")]
    NotAColumn(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("descent bottoms {actual:?} do not match the row labels {expected:?}")]
    DescentMismatch { expected: Vec<usize>, actual: Vec<usize> },

    #[error("decoration of letter {letter} is {value}, bound is {bound}")]
    DecorationOutOfRange { letter: usize, value: u32, bound: u32 },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("tree is not intransitive at vertex {0}")]
    NotIntransitive(usize),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("enumeration needs {required} items, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by malformed input rather than by an input
    /// that is well formed but fails a mathematical precondition.
    pub fn is_format_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidShape(_)
                | Error::SemiperimeterTooSmall(_)
                | Error::LengthMismatch { .. }
                | Error::InvalidPermutation(_)
                | Error::InvalidTree(_)
                | Error::Parse(_)
        )
    }
}

fn render_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
