//! Seeded random exact points with rejection of singular samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{rational, ArithError, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x0da5_a5b1;
pub const DEFAULT_TRIALS: usize = 20;
/// Bound on numerators and denominators of sampled rationals.
pub const BOX: i64 = 100;
const MAX_REJECTIONS: usize = 1000;

pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A nonzero rational `a/b` with `|a| ≤ 100`, `1 ≤ b ≤ 100`.
    pub fn rational(&mut self) -> Rational {
        loop {
            let a = self.rng.gen_range(-BOX..=BOX);
            if a != 0 {
                let b = self.rng.gen_range(1..=BOX);
                return rational(a, b);
            }
        }
    }

    pub fn rationals(&mut self, k: usize) -> Vec<Rational> {
        (0..k).map(|_| self.rational()).collect()
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Draws until `f` succeeds without hitting a vanishing denominator.
    pub fn accept<T>(&mut self, mut f: impl FnMut(&mut Self) -> Result<T>) -> Result<T> {
        for _ in 0..MAX_REJECTIONS {
            match f(self) {
                Err(e) if is_singular(&e) => continue,
                r => return r,
            }
        }
        Err(Error::Resource("no nonsingular sample point found".into()))
    }
}

/// Errors caused by the sample point rather than by the computation.
pub fn is_singular(e: &Error) -> bool {
    matches!(e, Error::Arith(ArithError::DivisionByZero | ArithError::NotInvertible(_) | ArithError::Vanishing(_)))
}
