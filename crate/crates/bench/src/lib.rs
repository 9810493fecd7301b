//! Shared fixture builders for the benchmark targets.
//!
//! Everything is seeded, so successive `cargo bench` runs measure the same
//! instances and numbers are comparable across changes.

use polyeq::random::{random_equivalent_pair, random_polymat, random_ratmat};
use polyeq::{PolyMat, RatMat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The 2x2 quartic pair with opposite parameters; small but exercises the
/// whole decide pipeline including witness recovery.
pub fn quartic_pair() -> (PolyMat, PolyMat) {
    let a = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[0, 1, 1], &[0, 0, 0, 0, 1]]]);
    let b = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[0, -1, 1], &[0, 0, 0, 0, 1]]]);
    (a, b)
}

/// Semi-scalar equivalent pair of size `n`, equivalent by construction.
pub fn equivalent_pair(n: usize, seed: u64) -> (PolyMat, PolyMat) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_equivalent_pair(&mut rng, n)
}

/// Dense polynomial matrix for Smith form benchmarks.
pub fn dense_polymat(n: usize, max_deg: usize, seed: u64) -> PolyMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_polymat(&mut rng, n, n, max_deg, 5)
}

/// Dense rational matrix for rank and nullspace benchmarks.
pub fn dense_ratmat(rows: usize, cols: usize, seed: u64) -> RatMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_ratmat(&mut rng, rows, cols, 9)
}
