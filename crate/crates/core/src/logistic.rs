//! The logistic map `x -> r·x·(1 − x)` as a seeded sequence generator.
//!
//! A [`ChaoticSeed`] is the pair `(x0, r)`. [`generate_sequence`] discards
//! a burn-in prefix of the orbit and emits the following iterates. Every
//! step is evaluated as `(r * x) * (1.0 - x)` so that the same seed gives
//! the same bits on every IEEE-754 platform.

use rand::rngs::OsRng;
use rand::RngCore;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::decimal::{format_decimal, parse_decimal};
use crate::error::{Error, Result};

/// Iterations discarded before the first emitted value.
pub const DEFAULT_BURN_IN: usize = 50;
/// Lower end of the parameter range accepted for seeds.
pub const R_MIN: f64 = 3.57;
/// Upper end of the parameter range accepted for seeds.
pub const R_MAX: f64 = 4.0;
/// Magnitude of the casual-mode nudge applied to `x0`.
pub const DEFAULT_NOISE_SCALE: f64 = 1e-12;
/// Fresh noise draws attempted before [`perturb_seed`] gives up.
pub const PERTURB_RETRIES: usize = 16;

/// One step of the logistic map.
///
/// Requires `x ∈ [0, 1]` and `r ∈ [0, 4]`; the result is then in `[0, 1]`.
pub fn logistic_step(x: f64, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            name: "x",
            value: x,
        });
    }
    if !(0.0..=4.0).contains(&r) {
        return Err(Error::Domain {
            name: "r",
            value: r,
        });
    }
    Ok(step(x, r))
}

#[inline(always)]
fn step(x: f64, r: f64) -> f64 {
    (r * x) * (1.0 - x)
}

/// Initial state and parameter of a logistic orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChaoticSeed {
    x0: f64,
    r: f64,
}

impl ChaoticSeed {
    pub fn new(x0: f64, r: f64) -> Result<Self> {
        if !(x0 > 0.0 && x0 < 1.0) {
            return Err(Error::X0OutOfRange(x0));
        }
        if !(R_MIN..=R_MAX).contains(&r) {
            return Err(Error::ROutOfRange(r));
        }
        if x0 == 1.0 - 1.0 / r {
            return Err(Error::FixedPointSeed);
        }
        Ok(Self { x0, r })
    }

    /// Builds a seed from the decimal strings used on the wire.
    pub fn from_decimal(x0: &str, r: &str) -> Result<Self> {
        Self::new(parse_decimal("x0", x0)?, parse_decimal("r", r)?)
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn with_x0(&self, x0: f64) -> Result<Self> {
        Self::new(x0, self.r)
    }

    pub fn with_r(&self, r: f64) -> Result<Self> {
        Self::new(self.x0, r)
    }

    /// `(x0, r)` as 17-significant-digit decimal strings.
    pub fn to_decimal(&self) -> (String, String) {
        (format_decimal(self.x0), format_decimal(self.r))
    }
}

#[derive(Serialize, Deserialize)]
struct SeedWire {
    x0: String,
    r: String,
}

impl Serialize for ChaoticSeed {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (x0, r) = self.to_decimal();
        SeedWire { x0, r }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChaoticSeed {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SeedWire::deserialize(deserializer)?;
        ChaoticSeed::from_decimal(&wire.x0, &wire.r).map_err(serde::de::Error::custom)
    }
}

/// Where a [`RandomSequence`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: ChaoticSeed,
    pub burn_in: usize,
}

/// Emitted iterates of a logistic orbit, all in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomSequence {
    pub provenance: Provenance,
    pub values: Vec<f64>,
}

impl RandomSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

impl AsRef<[f64]> for RandomSequence {
    fn as_ref(&self) -> &[f64] {
        &self.values
    }
}

/// Runs `burn_in` discarded steps from `seed.x0`, then emits `length` iterates.
///
/// Fails with [`Error::DegenerateOrbit`] if the orbit lands exactly on 0 or 1,
/// since both are absorbing.
pub fn generate_sequence(
    seed: ChaoticSeed,
    length: usize,
    burn_in: usize,
) -> Result<RandomSequence> {
    if length == 0 {
        return Err(Error::EmptyLength);
    }
    let r = seed.r;
    let mut x = seed.x0;
    let mut values = Vec::with_capacity(length);
    for n in 1..=burn_in + length {
        x = step(x, r);
        if x == 0.0 || x == 1.0 {
            return Err(Error::DegenerateOrbit { step: n, value: x });
        }
        if n > burn_in {
            values.push(x);
        }
    }
    Ok(RandomSequence {
        provenance: Provenance { seed, burn_in },
        values,
    })
}

/// Source of uniform noise on `[-1, 1]` for casual-mode seed perturbation.
pub trait NoiseSource {
    fn symmetric_unit(&mut self) -> Result<f64>;
}

fn bits_to_symmetric(bits: u64) -> f64 {
    const SCALE: f64 = ((1u64 << 53) - 1) as f64;
    ((bits >> 11) as f64 / SCALE) * 2.0 - 1.0
}

/// Noise drawn from the operating system's entropy pool.
#[derive(Debug, Default, Clone, Copy)]
pub struct OsNoise;

impl NoiseSource for OsNoise {
    fn symmetric_unit(&mut self) -> Result<f64> {
        let mut buf = [0u8; 8];
        OsRng
            .try_fill_bytes(&mut buf)
            .map_err(|e| Error::EntropyUnavailable(e.to_string()))?;
        Ok(bits_to_symmetric(u64::from_le_bytes(buf)))
    }
}

/// Adapts any `rand` generator, mostly for reproducible tests.
#[derive(Debug, Clone)]
pub struct RngNoise<R>(pub R);

impl<R: RngCore> NoiseSource for RngNoise<R> {
    fn symmetric_unit(&mut self) -> Result<f64> {
        Ok(bits_to_symmetric(self.0.next_u64()))
    }
}

/// Returns `(x0 + u·noise_scale, r)` with `u` uniform on `[-1, 1]`.
///
/// A draw that leaves the valid seed region is discarded and redrawn, up to
/// [`PERTURB_RETRIES`] times.
pub fn perturb_seed<N: NoiseSource + ?Sized>(
    seed: ChaoticSeed,
    noise_scale: f64,
    noise: &mut N,
) -> Result<ChaoticSeed> {
    if !noise_scale.is_finite() || noise_scale < 0.0 {
        return Err(Error::Domain {
            name: "noise_scale",
            value: noise_scale,
        });
    }
    for _ in 0..PERTURB_RETRIES {
        let u = noise.symmetric_unit()?;
        if let Ok(s) = seed.with_x0(seed.x0 + u * noise_scale) {
            return Ok(s);
        }
    }
    Err(Error::PerturbationExhausted(PERTURB_RETRIES))
}

/// Element-wise `|a[i] − b[i]|` of the two seeds' sequences.
pub fn divergence_profile(
    seed_a: ChaoticSeed,
    seed_b: ChaoticSeed,
    length: usize,
    burn_in: usize,
) -> Result<Vec<f64>> {
    let a = generate_sequence(seed_a, length, burn_in)?;
    let b = generate_sequence(seed_b, length, burn_in)?;
    Ok(a.values
        .iter()
        .zip(&b.values)
        .map(|(p, q)| (p - q).abs())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn seed(x0: f64, r: f64) -> ChaoticSeed {
        ChaoticSeed::new(x0, r).unwrap()
    }

    #[test]
    fn step_examples() {
        assert_eq!(logistic_step(0.5, 4.0).unwrap(), 1.0);
        assert_eq!(logistic_step(0.0, 3.99).unwrap(), 0.0);
        assert_eq!(logistic_step(1.0, 3.99).unwrap(), 0.0);
        // 3.99 · 0.25 · 0.75
        assert!((logistic_step(0.25, 3.99).unwrap() - 0.748125).abs() < 1e-15);
    }

    #[test]
    fn step_domain() {
        assert!(logistic_step(-0.1, 3.9).is_err());
        assert!(logistic_step(1.1, 3.9).is_err());
        assert!(logistic_step(0.5, 4.1).is_err());
        assert!(logistic_step(0.5, -1.0).is_err());
        assert!(logistic_step(f64::NAN, 3.9).is_err());
    }

    #[test]
    fn seed_bounds() {
        assert_eq!(ChaoticSeed::new(1.5, 3.9), Err(Error::X0OutOfRange(1.5)));
        assert!(ChaoticSeed::new(0.0, 3.9).is_err());
        assert!(ChaoticSeed::new(1.0, 3.9).is_err());
        assert!(ChaoticSeed::new(0.5, 3.5).is_err());
        assert!(ChaoticSeed::new(0.5, 4.0000001).is_err());
        assert!(ChaoticSeed::new(f64::NAN, 3.9).is_err());
        assert!(ChaoticSeed::new(0.5, 3.57).is_ok());
        assert!(ChaoticSeed::new(0.5, 4.0).is_ok());
        assert_eq!(
            ChaoticSeed::new(1.0 - 1.0 / 3.99, 3.99),
            Err(Error::FixedPointSeed)
        );
    }

    #[test]
    fn first_iterates_by_hand() {
        let s = generate_sequence(seed(0.3, 3.99), 3, 0).unwrap();
        let x1 = 3.99 * 0.3 * 0.7;
        let x2 = 3.99 * x1 * (1.0 - x1);
        let x3 = 3.99 * x2 * (1.0 - x2);
        assert!((s.values[0] - 0.8379).abs() < 1e-15);
        assert!((s.values[1] - x2).abs() < 1e-14);
        assert!((s.values[2] - x3).abs() < 1e-13);
    }

    #[test]
    fn burn_in_skips_prefix() {
        let long = generate_sequence(seed(0.25, 3.995), 60, 0).unwrap();
        let burnt = generate_sequence(seed(0.25, 3.995), 10, 50).unwrap();
        assert_eq!(&long.values[50..], &burnt.values[..]);
        assert_eq!(burnt.provenance.burn_in, 50);
    }

    #[test]
    fn million_values_in_range() {
        let s = generate_sequence(seed(0.25, 3.995), 1_000_000, DEFAULT_BURN_IN).unwrap();
        assert_eq!(s.len(), 1_000_000);
        assert!(s.values.iter().all(|v| (0.0..=1.0).contains(v)));
    }

    #[test]
    fn degenerate_orbit() {
        // 0.5 -> 1 -> 0 at r = 4.
        let err = generate_sequence(seed(0.5, 4.0), 5, 0).unwrap_err();
        assert_eq!(
            err,
            Error::DegenerateOrbit {
                step: 1,
                value: 1.0
            }
        );
        assert_eq!(
            generate_sequence(seed(0.25, 3.99), 0, 50),
            Err(Error::EmptyLength)
        );
    }

    #[test]
    fn perturbation_bounds() {
        let base = seed(0.25, 3.99);
        let mut noise = RngNoise(ChaCha8Rng::seed_from_u64(7));
        for _ in 0..1000 {
            let p = perturb_seed(base, DEFAULT_NOISE_SCALE, &mut noise).unwrap();
            assert!((p.x0() - 0.25).abs() <= 1e-12);
            assert_eq!(p.r(), 3.99);
        }
        let p = perturb_seed(base, DEFAULT_NOISE_SCALE, &mut OsNoise).unwrap();
        assert!((p.x0() - 0.25).abs() <= 1e-12);
    }

    struct Constant(f64);
    impl NoiseSource for Constant {
        fn symmetric_unit(&mut self) -> Result<f64> {
            Ok(self.0)
        }
    }

    struct Broken;
    impl NoiseSource for Broken {
        fn symmetric_unit(&mut self) -> Result<f64> {
            Err(Error::EntropyUnavailable("closed".into()))
        }
    }

    #[test]
    fn perturbation_errors() {
        let near_edge = seed(1e-13, 3.99);
        assert_eq!(
            perturb_seed(near_edge, 1e-12, &mut Constant(-1.0)),
            Err(Error::PerturbationExhausted(PERTURB_RETRIES))
        );
        assert!(matches!(
            perturb_seed(near_edge, 1e-12, &mut Broken),
            Err(Error::EntropyUnavailable(_))
        ));
        assert!(perturb_seed(near_edge, -1.0, &mut Constant(0.0)).is_err());
    }

    #[test]
    fn identical_seeds_do_not_diverge() {
        let s = seed(0.25, 3.99);
        let d = divergence_profile(s, s, 1000, DEFAULT_BURN_IN).unwrap();
        assert!(d.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn seed_serde_uses_decimal_strings() {
        let s = seed(0.25, 3.99);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"x0":"0.25000000000000000","r":"3.9900000000000002"}"#
        );
        let back: ChaoticSeed = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ChaoticSeed>(r#"{"x0":"2","r":"3.9"}"#).is_err());
    }

    fn valid_seed() -> impl Strategy<Value = ChaoticSeed> {
        (1e-6f64..1.0 - 1e-6, R_MIN..=R_MAX)
            .prop_filter_map("fixed point", |(x, r)| ChaoticSeed::new(x, r).ok())
    }

    proptest! {
        #[test]
        fn emitted_values_stay_in_unit_interval(s in valid_seed(), len in 1usize..5000) {
            if let Ok(seq) = generate_sequence(s, len, DEFAULT_BURN_IN) {
                prop_assert_eq!(seq.len(), len);
                prop_assert!(seq.values.iter().all(|v| (0.0..=1.0).contains(v)));
            }
        }

        #[test]
        fn generation_is_bit_deterministic(s in valid_seed(), len in 1usize..2000, burn in 0usize..100) {
            let a = generate_sequence(s, len, burn);
            let b = generate_sequence(s, len, burn);
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    let ab: Vec<u64> = a.values.iter().map(|v| v.to_bits()).collect();
                    let bb: Vec<u64> = b.values.iter().map(|v| v.to_bits()).collect();
                    prop_assert_eq!(ab, bb);
                }
                (a, b) => prop_assert_eq!(a.err(), b.err()),
            }
        }

        #[test]
        fn fixed_points_rejected_for_all_r(r in R_MIN..=R_MAX) {
            prop_assert!(ChaoticSeed::new(0.0, r).is_err());
            prop_assert!(ChaoticSeed::new(1.0, r).is_err());
            prop_assert_eq!(ChaoticSeed::new(1.0 - 1.0 / r, r), Err(Error::FixedPointSeed));
        }
    }
}
