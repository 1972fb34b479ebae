use thiserror::Error;

/// Errors shared across the crate.
///
/// The CLI maps these onto process exit codes: input-side problems
/// (`Parse`, `Shape`, `NotGeneralPosition`, `Parity`, `Generation`,
/// `Ceiling`, `Document`) exit 2, verification mismatches exit 3, and
/// `TheoremViolation` / `Degenerate` on inputs that already passed the
/// general-position check exit 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The named points (1-based labels, ascending) lie in a common
    /// hyperplane, i.e. the configuration is not in general position.
    #[error("not in general position: points {} lie in a common hyperplane", labels(.0))]
    NotGeneralPosition(Vec<usize>),

    #[error("malformed configuration: {0}")]
    Shape(String),

    #[error("wrong parity: operation requires {required} dimension, got n={n}")]
    Parity { required: &'static str, n: usize },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    /// A guarantee of the underlying theorem failed to materialize.
    /// This is always an implementation defect, never a property of the
    /// input; it must not be silently absorbed.
    #[error("theorem violation (internal defect): {0}")]
    TheoremViolation(String),

    /// An exact solve came out degenerate (underdetermined system or a
    /// boundary-grazing contact) on a path that assumed general position.
    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid document: {0}")]
    Document(String),

    #[error("enumeration limit: n={n} exceeds the ceiling {max}; pass an explicit override to go higher")]
    Ceiling { n: usize, max: usize },
}

fn labels(ls: &[usize]) -> String {
    let strs: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", strs.join(", "))
}

pub type Result<T> = std::result::Result<T, Error>;
