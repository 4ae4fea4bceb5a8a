use thiserror::Error;

pub type Result<T, E = XiError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum XiError {
    /// Argument outside the region where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or quadrature ran out of budget before meeting its tolerance.
    #[error("{what} did not converge: {detail}")]
    NoConvergence { what: &'static str, detail: String },
}

impl XiError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        XiError::Domain(msg.into())
    }

    pub(crate) fn no_convergence(what: &'static str, detail: impl Into<String>) -> Self {
        XiError::NoConvergence {
            what,
            detail: detail.into(),
        }
    }

    pub fn is_domain(&self) -> bool {
        matches!(self, XiError::Domain(_))
    }
}
