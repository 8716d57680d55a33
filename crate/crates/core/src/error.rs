use thiserror::Error;

/// Errors raised by the algebra, the solvers and the scheduling layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("the semiring zero has no multiplicative inverse")]
    InversionOfZero,

    #[error("zero raised to the non-positive power {0}")]
    ZeroToNonpositivePower(String),

    #[error("finite scalar expected, got {0}")]
    NonFinite(f64),

    #[error("dimension mismatch in {context}: expected {expected}, got {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("square matrix expected, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error(
        "matrix rows have unequal lengths: row {row} has {found} entries, expected {expected}"
    )]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("irregular input: {0}")]
    IrregularInput(String),

    #[error("no column of the positive closure has a unit diagonal entry")]
    NoUnitDiagonalColumn,

    #[error("matrix is reducible; strongly connected components: {}", format_components(.components))]
    ReducibleMatrix { components: Vec<Vec<usize>> },

    #[error("invalid problem field `{field}`: {message}")]
    InvalidProblem { field: String, message: String },

    #[error(
        "constraint digraph has a positive cycle (Tr = {big_trace}); constraints cannot be met"
    )]
    InfeasibleCycles { big_trace: f64 },
}

fn format_components(components: &[Vec<usize>]) -> String {
    components
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
