//! Seeded source of "generic" rational choices.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Rational;

pub const DEFAULT_SEED: u64 = 20_100_402;

pub struct Generic {
    rng: ChaCha8Rng,
}

impl Generic {
    pub fn new(seed: u64) -> Generic {
        Generic {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int(bound);
            if v != 0 {
                return v;
            }
        }
    }

    /// Rational with numerator in `[-bound, bound]` and denominator in `1..=den`.
    pub fn rational(&mut self, bound: i64, den: i64) -> Rational {
        let n = self.int(bound);
        let d = self.rng.gen_range(1..=den.max(1));
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn nonzero_rational(&mut self, bound: i64, den: i64) -> Rational {
        loop {
            let v = self.rational(bound, den);
            if v != Rational::from_integer(0.into()) {
                return v;
            }
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}
