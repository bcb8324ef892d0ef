//! Outcome distributions and seeded sampling by cumulative probability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::state::{BasisState, StateVector};

/// How far `Σ|α|²` may stray from 1 before a state counts as unnormalized.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Source of the uniform draws used for measurement and for picking `x`.
pub trait UniformSource {
    /// A uniform double in `[0, 1)`.
    fn next_uniform(&mut self) -> f64;

    /// A uniform integer in `[0, bound)`; `bound` must be positive.
    fn next_below(&mut self, bound: u64) -> u64;
}

/// Seeded ChaCha8 stream. The same seed yields the same sequence on every platform.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl UniformSource for RandomStream {
    fn next_uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.rng.random_range(0..bound)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    entries: Vec<(BasisState, f64)>,
}

impl OutcomeDistribution {
    /// `(ket, probability)` in ascending basis index.
    pub fn entries(&self) -> &[(BasisState, f64)] {
        &self.entries
    }

    /// First entry whose cumulative probability reaches `u`. A `u` beyond the
    /// accumulated total (rounding) selects the last entry.
    pub fn pick(&self, u: f64) -> BasisState {
        let mut cumulative = 0.0;
        for &(ket, p) in &self.entries {
            cumulative += p;
            if u <= cumulative {
                return ket;
            }
        }
        self.entries.last().expect("distribution is never empty").0
    }
}

fn check_normalized(v: &StateVector) -> Result<()> {
    let norm = v.norm();
    if (v.norm_sqr() - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NotNormalized(norm));
    }
    Ok(())
}

pub fn distribution(v: &StateVector) -> Result<OutcomeDistribution> {
    check_normalized(v)?;
    Ok(OutcomeDistribution {
        entries: v.kets().map(|(ket, a)| (ket, a.norm_sqr())).collect(),
    })
}

/// Measures every qubit of `v`, consuming exactly one uniform draw.
pub fn sample<R: UniformSource + ?Sized>(v: &StateVector, rng: &mut R) -> Result<BasisState> {
    let dist = distribution(v)?;
    Ok(dist.pick(rng.next_uniform()))
}
