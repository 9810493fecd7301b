//! Random instance generators for tests and benchmarks.
//!
//! Everything takes an explicit `Rng`, so callers control reproducibility by
//! seeding. Unimodular and invertible matrices are built as products of
//! elementary operations, which makes the required nonsingularity true by
//! construction rather than by rejection.

use crate::poly::Poly;
use crate::polymat::PolyMat;
use crate::rational::{rint, Rat};
use crate::ratmat::RatMat;
use num_traits::Zero;
use rand::Rng;

/// Random rational with numerator in `[-bound, bound]` and denominator 1 or 2.
pub fn random_rat(rng: &mut impl Rng, bound: i64) -> Rat {
    crate::rational::rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=2))
}

/// Random polynomial of degree at most `max_deg` (possibly zero).
pub fn random_poly(rng: &mut impl Rng, max_deg: usize, bound: i64) -> Poly {
    let len = rng.gen_range(0..=max_deg + 1);
    Poly::from_coeffs((0..len).map(|_| rint(rng.gen_range(-bound..=bound))).collect())
}

pub fn random_polymat(
    rng: &mut impl Rng,
    rows: usize,
    cols: usize,
    max_deg: usize,
    bound: i64,
) -> PolyMat {
    PolyMat::from_fn(rows, cols, |_, _| random_poly(rng, max_deg, bound))
}

pub fn random_ratmat(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> RatMat {
    RatMat::from_fn(rows, cols, |_, _| random_rat(rng, bound))
}

/// Product of `ops` random elementary row operations applied to the
/// identity: unimodular over ℚ[λ] by construction.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, ops: usize, bound: i64) -> PolyMat {
    let mut m = PolyMat::identity(n);
    if n == 1 {
        // only constant scalings keep a 1x1 matrix unimodular
        m.set(0, 0, Poly::constant(nonzero_constant(rng, bound)));
        return m;
    }
    for _ in 0..ops {
        match rng.gen_range(0..3) {
            0 => {
                let (i, j) = distinct_pair(rng, n);
                let q = random_poly(rng, 1, bound);
                m.row_sub_scaled(i, j, &q);
            }
            1 => {
                let (i, j) = distinct_pair(rng, n);
                m.swap_rows(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                m.scale_row(i, &nonzero_constant(rng, bound));
            }
        }
    }
    m
}

/// Invertible constant matrix built from elementary integer operations.
pub fn random_invertible_ratmat(rng: &mut impl Rng, n: usize, ops: usize, bound: i64) -> RatMat {
    let mut m = random_unimodular_const(rng, n, ops, bound);
    debug_assert!(m.is_nonsingular());
    // occasionally mix in a global rational scaling
    if rng.gen_bool(0.3) {
        m = m.scale(&crate::rational::rat(1, 2));
    }
    m
}

fn random_unimodular_const(rng: &mut impl Rng, n: usize, ops: usize, bound: i64) -> RatMat {
    let mut m = RatMat::identity(n);
    for _ in 0..ops {
        if n >= 2 && rng.gen_bool(0.7) {
            let (i, j) = distinct_pair(rng, n);
            let f = rint(rng.gen_range(-bound..=bound));
            for c in 0..n {
                let v = m.at(i, c) + &(&f * m.at(j, c));
                m.set(i, c, v);
            }
        } else {
            let i = rng.gen_range(0..n);
            let f = nonzero_constant(rng, bound);
            for c in 0..n {
                let v = m.at(i, c) * &f;
                m.set(i, c, v);
            }
        }
    }
    m
}

/// Monic diagonal with a divisibility chain, every factor linear with a
/// small integer root. The last entry always splits over ℚ.
pub fn random_invariant_diag(rng: &mut impl Rng, n: usize, max_last_deg: usize) -> Vec<Poly> {
    let mut diag = vec![Poly::one(); n];
    let deg = rng.gen_range(0..=max_last_deg);
    let mut last = Poly::one();
    let mut shared: Option<Poly> = None;
    for k in 0..deg {
        let factor = Poly::linear_from_root(&rint(rng.gen_range(-2..=2)));
        last = &last * &factor;
        if n >= 2 && k == 0 && rng.gen_bool(0.3) {
            shared = Some(factor);
        }
    }
    diag[n - 1] = last;
    if let Some(f) = shared {
        // plant the shared factor one step down the chain as well
        diag[n - 2] = f.clone();
        diag[n - 1] = &diag[n - 1] * &f;
    }
    diag
}

/// A pair `(a, b)` with `a = P·b·Q` for random nonsingular `b`, constant
/// invertible `P`, and unimodular `Q`: semi-scalar equivalent by
/// construction, with the last invariant factor splitting over ℚ.
pub fn random_equivalent_pair(rng: &mut impl Rng, n: usize) -> (PolyMat, PolyMat) {
    let diag = random_invariant_diag(rng, n, 3);
    let d = PolyMat::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { Poly::zero() });
    let u = random_unimodular(rng, n, 2, 2);
    let w = random_unimodular(rng, n, 2, 2);
    let b = &(&u * &d) * &w;
    let p = random_invertible_ratmat(rng, n, 3, 2);
    let q = random_unimodular(rng, n, 2, 2);
    let a = &(&p.to_polymat() * &b) * &q;
    (a, b)
}

fn nonzero_constant(rng: &mut impl Rng, bound: i64) -> Rat {
    loop {
        let c = rint(rng.gen_range(-bound..=bound));
        if !c.is_zero() {
            return c;
        }
    }
}

fn distinct_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n);
    while j == i {
        j = rng.gen_range(0..n);
    }
    (i, j)
}
