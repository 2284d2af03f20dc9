use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("rotation angle {angle} outside the principal range [0, 2π)")]
    OutOfDomain { angle: f64 },
    #[error("singular configuration: {0}")]
    Singular(String),
    #[error("order {order} is not supported for {target}")]
    UnsupportedOrder { target: &'static str, order: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_finite(values: &[f64], what: &str) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{what} contains non-finite entries"
        )))
    }
}
