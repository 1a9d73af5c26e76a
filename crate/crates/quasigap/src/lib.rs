//! Gap statistics of directions in planar cut-and-project quasicrystals.
//!
//! Two pipelines that check each other:
//!
//! * an exact one: arithmetic in a real quadratic field, staircase-extremal
//!   points of its ideals, and a theta-integral that yields the tail
//!   coefficient `a_P` with `F(s) ~ a_P / s^2` for the limiting gap
//!   distribution of directions;
//! * an empirical one: streaming enumeration of the point set inside a large
//!   disc, exact-sorted direction angles, and the observed gap statistics
//!   `F_R`, `G_R`, histograms and visible-point fractions.
//!
//! The built-in presets generate the vertex sets of Ammann-Beenker,
//! Gähler shield and Tübingen triangle tilings.

pub mod coeff;
pub mod cps;
pub mod extremal;
pub mod gapstats;
pub mod quadfield;
pub mod rational;
pub mod verify;
pub mod window;

pub use coeff::CoefficientReport;
pub use cps::{CutProjectSpec, QuasicrystalPoint};
pub use extremal::{CriticalValue, ExtremalSet, NuPartition};
pub use gapstats::{DirectionList, GapStatistics};
pub use quadfield::{FieldElement, Ideal, RealQuadraticField};
pub use rational::Rat;
pub use window::{SupportInterval, TilingPreset, Window};

/// Errors shared across the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("method inapplicable: {0}")]
    Inapplicable(String),
    #[error("coordinate bounds exceeded: {0}")]
    Overflow(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
