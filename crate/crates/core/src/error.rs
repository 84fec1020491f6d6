use thiserror::Error;

/// Errors raised for malformed input or work above the configured ceiling.
///
/// A preference list that simply fails to park is *not* an error; that is
/// reported through [`crate::parking::Status`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("preference list has {actual} entries but {expected} cars were declared")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("car {car} prefers spot {spot}, outside 1..={spots}")]
    PreferenceOutOfRange {
        car: usize,
        spot: usize,
        spots: usize,
    },

    #[error("invalid outcome word: {0}")]
    InvalidWord(String),

    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("position {0} holds a vacant spot, not a car")]
    VacantPosition(usize),

    #[error("{what} needs about {work} steps, above the ceiling of {ceiling} (raise it with --ceiling or PULLBACK_CEILING)")]
    TooLarge {
        what: &'static str,
        work: u128,
        ceiling: u128,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
