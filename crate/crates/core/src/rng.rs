use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The single random source used by instance construction and the harness.
///
/// ChaCha8 seeded from a `u64`. Streams are reproducible across platforms and
/// across releases of this crate; [`GnbgRng::fork`] derives an independent
/// child stream without disturbing sibling draws beyond one `u64`.
#[derive(Debug, Clone)]
pub struct GnbgRng(ChaCha8Rng);

impl GnbgRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Generator on a numbered ChaCha stream. Stream 0 is [`GnbgRng::new`];
    /// equal seeds on different streams give unrelated sequences.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self(inner)
    }

    /// Child generator seeded from the next `u64` of this stream.
    pub fn fork(&mut self) -> Self {
        Self::new(self.0.next_u64())
    }

    /// Uniform draw from the open interval `(a, b)`; endpoints are redrawn.
    pub fn open_uniform(&mut self, a: f64, b: f64) -> f64 {
        debug_assert!(a < b);
        loop {
            let u: f64 = self.0.random();
            let v = a + (b - a) * u;
            if v > a && v < b {
                return v;
            }
        }
    }

    /// Uniform draw from `[a, b]`.
    pub fn closed_uniform(&mut self, a: f64, b: f64) -> f64 {
        let u: f64 = self.0.random();
        (a + (b - a) * u).min(b)
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.0.random_range(0..n)
    }
}

impl RngCore for GnbgRng {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.0.fill_bytes(dst)
    }
}
