//! Seeded random screws for the oracle suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Screw, Vec3, Vec6};

pub const DEFAULT_SEED: u64 = 20_210_514;

pub struct ScrewSampler {
    rng: ChaCha8Rng,
}

impl ScrewSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..=hi)
    }

    /// Log-uniform on [lo, hi], so small angles are well represented.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.uniform(lo.ln(), hi.ln()).exp()
    }

    pub fn unit_vector(&mut self) -> Vec3 {
        loop {
            let v = Vec3::new(
                self.uniform(-1.0, 1.0),
                self.uniform(-1.0, 1.0),
                self.uniform(-1.0, 1.0),
            );
            let n = v.norm();
            if n > 1e-3 && n <= 1.0 {
                return v / n;
            }
        }
    }

    /// Entries uniform in [-1, 1].
    pub fn vec6(&mut self) -> Vec6 {
        Vec6::from_fn(|_, _| self.uniform(-1.0, 1.0))
    }

    pub fn direction(&mut self) -> Screw {
        self.vec6().into()
    }

    /// Rotation angle log-uniform in [lo, hi], translation entries in [-1, 1].
    pub fn screw(&mut self, lo: f64, hi: f64) -> Screw {
        let phi = self.log_uniform(lo, hi);
        let x = self.unit_vector() * phi;
        let y = Vec3::new(
            self.uniform(-1.0, 1.0),
            self.uniform(-1.0, 1.0),
            self.uniform(-1.0, 1.0),
        );
        Screw::new(x, y)
    }
}
