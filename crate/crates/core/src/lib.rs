//! Reproducible pseudorandomness from the logistic map.
//!
//! - [`logistic`]: seeds, burn-in sequence generation, casual-mode perturbation
//!   and divergence measurement.
//! - [`placement`]: argsort-based permutation of grid cells for object placement.
//! - [`mt`]: a from-scratch MT19937 used as the comparison baseline.
//! - [`stats`]: standard deviation, regression line, histogram, correlation and
//!   bifurcation data.

pub mod decimal;
pub mod error;
pub mod logistic;
pub mod mt;
pub mod placement;
pub mod stats;

pub use error::{Error, Result};
pub use logistic::{
    divergence_profile, generate_sequence, logistic_step, perturb_seed, ChaoticSeed, NoiseSource,
    OsNoise, Provenance, RandomSequence, RngNoise, DEFAULT_BURN_IN, DEFAULT_NOISE_SCALE,
};
pub use mt::MtState;
pub use placement::{
    argsort, competition_placements, index_to_xy, placements, replay_matches, GridSpec,
    IndexPermutation, Mode, PlacementSequence,
};
pub use stats::{
    bifurcation_data, correlation, histogram, lsrl, std_dev, BifurcationConfig, BifurcationPoint,
    StatsReport,
};
