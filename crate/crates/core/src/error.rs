use thiserror::Error;

/// Errors raised by the special-function substrate, the operators and the
/// state factories.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("regularity violation: power + order = {sum} is negative")]
    Regularity { sum: f64 },

    #[error("classification error: {0}")]
    Classification(String),

    #[error("refusing to evaluate at {coordinate} = {value}: within {margin} of a singular locus")]
    SingularPoint {
        coordinate: &'static str,
        value: f64,
        margin: f64,
    },

    #[error("normalization undefined for 2l = {twoell} in sector ({e1},{e2}): radicand {radicand}")]
    NormalizationUndefined { twoell: u32, e1: u8, e2: u8, radicand: f64 },

    #[error("quadrature did not converge: estimate {estimate}, error {error_estimate}")]
    Quadrature { estimate: f64, error_estimate: f64 },

    #[error("inadmissible state: {}", .0.join("; "))]
    Inadmissible(Vec<String>),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn finite(name: &str, x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Input(format!("{name} must be finite, got {x}")))
    }
}
