//! Reproducible object placement on an `M × N` grid.
//!
//! A logistic sequence of length `M·N` is argsorted; the i-th index of the
//! resulting permutation is the cell (counted left to right, top to bottom)
//! where the i-th object goes. Competition mode uses the seed verbatim so
//! every player sees the same placements; casual mode nudges `x0` first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logistic::{
    generate_sequence, perturb_seed, ChaoticSeed, NoiseSource, DEFAULT_BURN_IN, DEFAULT_NOISE_SCALE,
};

/// Default upper bound on `width · height`.
pub const DEFAULT_MAX_CELLS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GridWire")]
pub struct GridSpec {
    width: usize,
    height: usize,
}

#[derive(Deserialize)]
struct GridWire {
    width: usize,
    height: usize,
}

impl TryFrom<GridWire> for GridSpec {
    type Error = Error;

    fn try_from(w: GridWire) -> Result<Self> {
        GridSpec::new(w.width, w.height)
    }
}

impl GridSpec {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        Self::with_max_cells(width, height, DEFAULT_MAX_CELLS)
    }

    pub fn with_max_cells(width: usize, height: usize, max_cells: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::GridShape { width, height });
        }
        let cells = width.checked_mul(height).ok_or(Error::GridTooLarge {
            width,
            height,
            max_cells,
        })?;
        if cells < 2 {
            return Err(Error::GridShape { width, height });
        }
        if cells > max_cells {
            return Err(Error::GridTooLarge {
                width,
                height,
                max_cells,
            });
        }
        Ok(Self { width, height })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn cells(&self) -> usize {
        self.width * self.height
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Competition,
    Casual,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "competition" => Ok(Mode::Competition),
            "casual" => Ok(Mode::Casual),
            other => Err(format!(
                "unknown mode {other:?} (expected competition or casual)"
            )),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Competition => "competition",
            Mode::Casual => "casual",
        })
    }
}

/// A permutation of `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPermutation(Vec<usize>);

impl IndexPermutation {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// Indices of `values` in ascending value order; equal values keep their
/// original relative order.
pub fn argsort(values: &[f64]) -> Result<IndexPermutation> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut idx: Vec<usize> = (0..values.len()).collect();
    // Stable sort, total_cmp: NaN cannot occur for logistic output but must not panic.
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    Ok(IndexPermutation(idx))
}

/// Cell index to `(x, y)` with the origin at the top-left.
pub fn index_to_xy(index: usize, grid: GridSpec) -> Result<(usize, usize)> {
    if index >= grid.cells() {
        return Err(Error::IndexOutOfRange {
            index,
            cells: grid.cells(),
        });
    }
    Ok((index % grid.width, index / grid.width))
}

fn default_burn_in() -> usize {
    DEFAULT_BURN_IN
}

fn is_default_burn_in(b: &usize) -> bool {
    *b == DEFAULT_BURN_IN
}

/// Object locations in placement order.
///
/// `seed` is the seed actually iterated: the perturbed one in casual mode,
/// so any sequence can be replayed from its own record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlacementSequence {
    pub seed: ChaoticSeed,
    pub grid: GridSpec,
    pub mode: Mode,
    #[serde(
        default = "default_burn_in",
        skip_serializing_if = "is_default_burn_in"
    )]
    pub burn_in: usize,
    pub coords: Vec<(usize, usize)>,
}

impl PlacementSequence {
    /// Keeps only the first `count` placements.
    pub fn truncate(&mut self, count: usize) {
        self.coords.truncate(count);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("placement sequences always serialize")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Full-grid placement order for `seed`.
///
/// `noise` is consulted only in [`Mode::Casual`].
pub fn placements<N: NoiseSource + ?Sized>(
    seed: ChaoticSeed,
    grid: GridSpec,
    mode: Mode,
    burn_in: usize,
    noise: &mut N,
) -> Result<PlacementSequence> {
    let used = match mode {
        Mode::Competition => seed,
        Mode::Casual => perturb_seed(seed, DEFAULT_NOISE_SCALE, noise)?,
    };
    let sequence = generate_sequence(used, grid.cells(), burn_in)?;
    let order = argsort(sequence.values())?;
    let coords = order
        .as_slice()
        .iter()
        .map(|&z| (z % grid.width, z / grid.width))
        .collect();
    Ok(PlacementSequence {
        seed: used,
        grid,
        mode,
        burn_in,
        coords,
    })
}

/// Competition-mode placements; never touches an entropy source.
pub fn competition_placements(
    seed: ChaoticSeed,
    grid: GridSpec,
    burn_in: usize,
) -> Result<PlacementSequence> {
    struct NoNoise;
    impl NoiseSource for NoNoise {
        fn symmetric_unit(&mut self) -> Result<f64> {
            unreachable!("competition mode draws no noise")
        }
    }
    placements(seed, grid, Mode::Competition, burn_in, &mut NoNoise)
}

/// Regenerates a recorded sequence from its own seed and checks that the
/// recorded coordinates are a prefix of the regenerated order.
pub fn replay_matches(recorded: &PlacementSequence) -> Result<bool> {
    let fresh = competition_placements(recorded.seed, recorded.grid, recorded.burn_in)?;
    Ok(fresh.coords.starts_with(&recorded.coords))
}
