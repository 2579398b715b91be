use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element `{0}` is not in the ground set")]
    UnknownElement(String),
    #[error("duplicate element `{0}` in ground set")]
    DuplicateElement(String),
    #[error("subset {subset:#x} is not contained in a ground set of size {n}")]
    NotASubset { subset: u64, n: usize },
    #[error("ground set of size {0} exceeds the 62-element limit")]
    GroundTooLarge(usize),
    #[error("{0} requires a proper set system (nonempty family)")]
    Improper(&'static str),
    #[error("{op} is limited to ground sets of size {max}, got {n} (use force to override)")]
    SizeLimit {
        op: &'static str,
        n: usize,
        max: usize,
    },
    #[error("orbit exceeded the cap of {cap} systems")]
    CapExceeded { cap: usize },
    #[error("pivot on {0:#x} is undefined: principal submatrix is singular")]
    PivotUndefined(u64),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),
    #[error("set system is not the support system of a graph")]
    NotAGraph,
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("{0:#x} is not a basis")]
    NotABasis(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    Arithmetic(String),
}

impl Error {
    /// Variant name, stable across message wording changes.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnknownElement(_) => "UnknownElement",
            Error::DuplicateElement(_) => "DuplicateElement",
            Error::NotASubset { .. } => "NotASubset",
            Error::GroundTooLarge(_) => "GroundTooLarge",
            Error::Improper(_) => "Improper",
            Error::SizeLimit { .. } => "SizeLimit",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::PivotUndefined(_) => "PivotUndefined",
            Error::NotSymmetric => "NotSymmetric",
            Error::Dimension(_) => "Dimension",
            Error::NotAGraph => "NotAGraph",
            Error::NotAMatroid(_) => "NotAMatroid",
            Error::NotABasis(_) => "NotABasis",
            Error::Precondition(_) => "Precondition",
            Error::Arithmetic(_) => "Arithmetic",
        }
    }
}
