use thiserror::Error;

use crate::fock::{LabeledMode, Path};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mode {0} is not registered in this state")]
    UnregisteredMode(LabeledMode),

    #[error("mode {0} is registered twice")]
    DuplicateMode(LabeledMode),

    #[error("occupation vector has {got} entries, registry has {expected} modes")]
    OccupationLength { expected: usize, got: usize },

    #[error("path {0} is not registered in this state")]
    UnregisteredPath(Path),

    #[error("cannot normalize the zero state")]
    ZeroNorm,

    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("beam splitter needs two distinct paths, got {0} twice")]
    SamePath(Path),

    #[error("path {0} is already registered; cannot rename onto it")]
    PathInUse(Path),

    #[error("subtraction needs at least one path")]
    EmptyPathSet,

    #[error("detector on path {0} appears in more than one role")]
    OverlappingDetectors(Path),

    #[error("fringe needs at least 8 phase points, got {0}")]
    TooFewPhasePoints(usize),

    #[error("fringe has no signal (mean probability {0:e}); visibility undefined")]
    UndefinedVisibility(f64),

    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("objective returned a non-finite value at ({0}, {1})")]
    NonFinite(f64, f64),

    #[error("noise photon count {0} outside 1..=6")]
    NoiseCount(usize),

    #[error("coincidence probability vanishes for every phase")]
    ZeroCoincidence,

    #[error("visibility formula denominator vanishes")]
    ZeroDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;

/// Range check helper shared by every parameter validator.
pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            range: "[0, 1]",
        })
    }
}
