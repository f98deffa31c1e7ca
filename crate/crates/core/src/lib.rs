//! Fock-space simulation of a two-photon Mach-Zehnder interferometer in
//! which a "noise" photon of tunable distinguishability is mixed into one
//! arm and a photon is then removed from that arm by post-selection.
//!
//! * [`fock`]: sparse multimode states over `(path, label)` modes.
//! * [`optics`]: beam splitters, phases, losses and photon subtraction.
//! * [`detection`]: threshold detection, fringes and visibility.
//! * [`scenarios`]: the single-photon model, the full setup, N-photon
//!   scaling and the HOM dip.
//! * [`oracle`]: closed-form visibilities and a numeric optimizer.
//! * [`sweep`]: parameter sweeps over the full setup.

pub mod detection;
pub mod error;
pub mod exec;
pub mod fock;
pub mod optics;
pub mod oracle;
pub mod scenarios;
pub mod search;
pub mod sweep;

pub use error::{Error, Result};
pub use exec::Exec;
