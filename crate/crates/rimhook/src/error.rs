use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration was refused because it would produce too many elements.
    #[error("enumeration guard exceeded: {requested} elements requested, limit is {limit}")]
    GuardExceeded { requested: u128, limit: u128 },

    /// A quantity that is only defined for m-decomposable partitions was
    /// requested for a partition with a nonempty m-core.
    #[error("partition {partition} is not {m}-decomposable")]
    NotDecomposable { partition: String, m: usize },

    /// Argument outside the supported numerical range.
    #[error("argument {value} outside supported range [{min}, {max}]")]
    OutOfRange { value: f64, min: f64, max: f64 },

    /// The Painlevé II boundary-value solve failed to converge.
    #[error("Painlevé II solve did not converge: {detail}")]
    PainleveNoConvergence { detail: String },

    /// The Fredholm determinant did not stabilize under quadrature doubling.
    #[error("Fredholm determinant did not converge by quadrature order {max_order}")]
    FredholmNoConvergence { max_order: usize },

    /// Malformed input (CLI strings, invalid permutation data, ...).
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            detail: detail.into(),
        }
    }
}
