//! Seeded, platform-independent rational sampling.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{QidError, Result};
use crate::exactcore::Scalar;

/// Maximum number of rejected draws before a rejection loop gives up.
pub const MAX_REJECTIONS: usize = 1000;

/// Bounds for a sampled rational `num / den`, both ranges inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeSpec {
    pub num: RangeInclusive<i64>,
    pub den: RangeInclusive<i64>,
    /// Redraw zero numerators.
    pub nonzero: bool,
}

impl RangeSpec {
    pub fn new(num: RangeInclusive<i64>, den: RangeInclusive<i64>) -> Self {
        assert!(*den.start() >= 1, "denominators must be positive");
        assert!(num.start() <= num.end() && den.start() <= den.end());
        RangeSpec {
            num,
            den,
            nonzero: false,
        }
    }

    pub fn nonzero(mut self) -> Self {
        assert!(
            *self.num.start() != 0 || *self.num.end() != 0,
            "nonzero sampling needs a nonzero numerator"
        );
        self.nonzero = true;
        self
    }
}

impl Default for RangeSpec {
    /// Nonzero rationals with numerators in `[-60, 60]` and denominators in `[1, 20]`.
    fn default() -> Self {
        RangeSpec::new(-60..=60, 1..=20).nonzero()
    }
}

/// ChaCha8 stream keyed by `(seed, stream)`. Identical keys give identical
/// draws on every platform.
#[derive(Clone, Debug)]
pub struct SeededSampler {
    seed: u64,
    stream: u64,
    position: u64,
    rng: ChaCha8Rng,
}

impl SeededSampler {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        SeededSampler {
            seed,
            stream,
            position: 0,
            rng,
        }
    }

    /// An independent sampler on another stream of the same seed.
    pub fn split(&self, stream: u64) -> Self {
        Self::with_stream(self.seed, stream)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Number of draws taken so far.
    pub fn position(&self) -> u64 {
        self.position
    }

    pub fn sample_int(&mut self, range: RangeInclusive<i64>) -> i64 {
        self.position += 1;
        self.rng.gen_range(range)
    }

    pub fn sample_scalar(&mut self, range: &RangeSpec) -> Scalar {
        loop {
            let num = self.sample_int(range.num.clone());
            let den = self.sample_int(range.den.clone());
            if range.nonzero && num == 0 {
                continue;
            }
            return Scalar::ratio(num, den);
        }
    }

    /// Rejection sampling: calls `draw` until it returns `Ok`, at most
    /// [`MAX_REJECTIONS`] times. `draw` reports why a candidate was rejected.
    pub fn rejection<T, F>(&mut self, mut draw: F) -> Result<T>
    where
        F: FnMut(&mut SeededSampler) -> std::result::Result<T, String>,
    {
        let mut last = String::new();
        for _ in 0..MAX_REJECTIONS {
            match draw(self) {
                Ok(v) => return Ok(v),
                Err(reason) => last = reason,
            }
        }
        Err(QidError::SamplerExhausted {
            attempts: MAX_REJECTIONS,
            reason: last,
        })
    }
}
