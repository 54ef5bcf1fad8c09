use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fiber_algebra::Covector;
use crate::scalar_ring::{GaussRat, ParamScalar};

pub const DEFAULT_SEED: u64 = 0x5EED;

/// FNV-1a, used to give every tag its own random stream.
pub fn stream_of(name: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Rational samples with numerators and denominators in `[−9, 9] \ {0}`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    fn digit(&mut self) -> i64 {
        let k = self.rng.gen_range(1..=18);
        if k <= 9 {
            k
        } else {
            9 - k
        }
    }

    pub fn fraction(&mut self) -> (i64, i64) {
        (self.digit(), self.digit())
    }

    pub fn rational(&mut self) -> ParamScalar {
        let (n, d) = self.fraction();
        ParamScalar::from_frac(n, d)
    }

    pub fn gauss(&mut self) -> GaussRat {
        let (n, d) = self.fraction();
        GaussRat::from_frac(n, d)
    }

    pub fn covector(&mut self, n: usize) -> Covector {
        Covector::new((0..n).map(|_| self.rational()).collect())
    }

    /// Rational point of S² in the first three slots of a 4-covector, from
    /// `(m² + n² − p² − q², 2(mq + np), 2(nq − mp)) / (m² + n² + p² + q²)`.
    pub fn sphere2_point(&mut self) -> Covector {
        loop {
            let v: Vec<i64> = (0..4).map(|_| self.rng.gen_range(-9..=9)).collect();
            let (m, n, p, q) = (v[0], v[1], v[2], v[3]);
            let s = m * m + n * n + p * p + q * q;
            if s == 0 {
                continue;
            }
            let x = [m * m + n * n - p * p - q * q, 2 * (m * q + n * p), 2 * (n * q - m * p), 0];
            return Covector::new(x.iter().map(|&c| ParamScalar::from_frac(c, s)).collect());
        }
    }
}
