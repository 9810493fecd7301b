//! Matrices over `Rat` and exact linear algebra: rank, nullspace, inverse,
//! and the grid search for a nonsingular matrix inside a vector span.
//!
//! Rank runs fraction-free (Bareiss) on a denominator-cleared integer copy.
//! Nullspace and inverse use reduced row echelon form over the rationals with
//! first-nonzero pivoting, so their output is deterministic.

use crate::polymat::PolyMat;
use crate::rational::{rint, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

/// Dense row-major matrix over `Rat`. Zero rows are allowed (a stacked
/// evaluation matrix for a constant modulus has none), zero columns are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMat {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert!(cols > 0, "matrix must have at least one column");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        RatMat { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "no rows given");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        RatMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rint(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatMat::new(rows, cols, entries)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        RatMat::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> RatMat {
        RatMat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Rat) -> RatMat {
        RatMat::new(self.rows, self.cols, self.entries.iter().map(|e| e * c).collect())
    }

    /// Row-major flattening into an `rc x 1` column vector.
    pub fn col_stack(&self) -> RatMat {
        RatMat::new(self.rows * self.cols, 1, self.entries.clone())
    }

    /// Inverse of `col_stack` for an `n²x1` vector.
    pub fn reshape(&self, n: usize) -> RatMat {
        assert_eq!(self.cols, 1, "reshape expects a column vector");
        assert_eq!(self.rows, n * n, "length must be n²");
        RatMat::new(n, n, self.entries.clone())
    }

    /// Degree-zero lift into a polynomial matrix.
    pub fn to_polymat(&self) -> PolyMat {
        PolyMat::from_fn(self.rows, self.cols, |i, j| {
            crate::poly::Poly::constant(self.at(i, j).clone())
        })
    }

    /// Copy without all-zero rows. Never changes rank or nullspace.
    pub fn prune_zero_rows(&self) -> RatMat {
        let kept: Vec<usize> = (0..self.rows)
            .filter(|&i| (0..self.cols).any(|j| !self.at(i, j).is_zero()))
            .collect();
        let mut entries = Vec::with_capacity(kept.len() * self.cols);
        for &i in &kept {
            for j in 0..self.cols {
                entries.push(self.at(i, j).clone());
            }
        }
        RatMat::new(kept.len(), self.cols, entries)
    }

    /// Exact rank via fraction-free (Bareiss) elimination on a
    /// denominator-cleared integer copy.
    pub fn rank(&self) -> usize {
        let cols = self.cols;
        let mut m: Vec<BigInt> = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..cols {
                lcm = lcm.lcm(self.at(i, j).denom());
            }
            for j in 0..cols {
                let e = self.at(i, j);
                m.push(e.numer() * &lcm / e.denom());
            }
        }
        let mut rank = 0usize;
        let mut prev = BigInt::one();
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    m.swap(p * cols + j, rank * cols + j);
                }
            }
            for i in rank + 1..self.rows {
                for j in c + 1..cols {
                    let t = &m[rank * cols + c] * &m[i * cols + j]
                        - &m[i * cols + c] * &m[rank * cols + j];
                    debug_assert!((&t % &prev).is_zero(), "Bareiss division must be exact");
                    m[i * cols + j] = t / &prev;
                }
                m[i * cols + c] = BigInt::zero();
            }
            prev = m[rank * cols + c].clone();
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&self) -> (Vec<Rat>, Vec<usize>) {
        let cols = self.cols;
        let mut m = self.entries.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = m[r * cols + c].recip();
            for j in c..cols {
                m[r * cols + j] = &m[r * cols + j] * &inv;
            }
            for i in 0..self.rows {
                if i == r || m[i * cols + c].is_zero() {
                    continue;
                }
                let f = m[i * cols + c].clone();
                for j in c..cols {
                    let t = &f * &m[r * cols + j];
                    m[i * cols + j] = &m[i * cols + j] - &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of `{ v : M v = 0 }`, one vector per free column, in column
    /// order, each with a 1 in its free coordinate.
    pub fn nullspace(&self) -> NullspaceBasis {
        let cols = self.cols;
        let (m, pivots) = self.rref();
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for f in 0..cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -&m[k * cols + f];
            }
            vectors.push(RatMat::new(cols, 1, v));
        }
        NullspaceBasis {
            dim: vectors.len(),
            vectors,
        }
    }

    /// Exact inverse; `None` when singular. Requires a square matrix.
    pub fn invert(&self) -> Option<RatMat> {
        assert!(self.is_square(), "only square matrices can be inverted");
        let n = self.rows;
        let aug = RatMat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(RatMat::from_fn(n, n, |i, j| m[i * 2 * n + n + j].clone()))
    }

    /// Determinant by exact Gaussian elimination.
    pub fn determinant(&self) -> Rat {
        assert!(self.is_square(), "determinant requires a square matrix");
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i * n + c].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                for j in 0..n {
                    m.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            det = &det * &m[c * n + c];
            let inv = m[c * n + c].recip();
            for i in c + 1..n {
                if m[i * n + c].is_zero() {
                    continue;
                }
                let f = &m[i * n + c] * &inv;
                for j in c..n {
                    let t = &f * &m[c * n + j];
                    m[i * n + j] = &m[i * n + j] - &t;
                }
            }
        }
        det
    }

    pub fn is_nonsingular(&self) -> bool {
        self.is_square() && !self.determinant().is_zero()
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        self.at(r, c)
    }
}

impl Add for &RatMat {
    type Output = RatMat;
    fn add(self, rhs: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RatMat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &RatMat {
    type Output = RatMat;
    fn sub(self, rhs: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RatMat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Mul for &RatMat {
    type Output = RatMat;
    fn mul(self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        RatMat::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc = &acc + &(self.at(i, k) * rhs.at(k, j));
            }
            acc
        })
    }
}

impl fmt::Display for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let mut widths = vec![0usize; self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                widths[j] = widths[j].max(strs[i * self.cols + j].len());
            }
        }
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                write!(f, " {:>w$}", strs[i * self.cols + j], w = widths[j])?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

/// Basis of a nullspace: `dim` linearly independent column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullspaceBasis {
    pub dim: usize,
    pub vectors: Vec<RatMat>,
}

/// Outcome of the span search in `find_nonsingular_reshape`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReshapeSearch {
    Found { coeffs: Vec<Rat>, matrix: RatMat },
    /// Proven: every matrix in the span is singular.
    NoneExists,
    /// The span was too large to search exhaustively and random sampling
    /// found nothing; no proof either way.
    Inconclusive { reason: String },
}

/// Spans with more vectors than this are not searched exhaustively.
pub const DEFAULT_MAX_GRID_VARS: usize = 8;

const RESHAPE_SEARCH_SEED: u64 = 0x00C0_FFEE;

/// Search `span(basis)` for a combination whose `n x n` reshape is
/// nonsingular.
///
/// `det(Σ tᵢ·reshape(vᵢ))` is a polynomial of degree at most `n` in each
/// `tᵢ`, so it vanishes identically iff it vanishes on the grid `{0..n}^k`.
/// The grid is scanned in lexicographic order and the first hit is returned;
/// a full scan with no hit is a proof that none exists. For `k` beyond
/// `max_grid_vars` the exhaustive scan is refused: a seeded random search
/// (64·n trials over `{0..16n}`) runs instead, and failure there is reported
/// as `Inconclusive`, never as `NoneExists`.
pub fn find_nonsingular_reshape(
    basis: &NullspaceBasis,
    n: usize,
    max_grid_vars: usize,
) -> ReshapeSearch {
    let k = basis.vectors.len();
    for v in &basis.vectors {
        assert_eq!((v.rows, v.cols), (n * n, 1), "basis vectors must be n²x1");
    }
    if k == 0 {
        return ReshapeSearch::NoneExists;
    }
    let reshaped: Vec<RatMat> = basis.vectors.iter().map(|v| v.reshape(n)).collect();
    let combine = |t: &[Rat]| -> RatMat {
        let mut acc = RatMat::zero(n, n);
        for (c, m) in t.iter().zip(&reshaped) {
            if !c.is_zero() {
                acc = &acc + &m.scale(c);
            }
        }
        acc
    };

    if k <= max_grid_vars {
        let mut digits = vec![0u64; k];
        loop {
            if digits.iter().any(|&d| d != 0) {
                let coeffs: Vec<Rat> = digits.iter().map(|&d| rint(d as i64)).collect();
                let m = combine(&coeffs);
                if !m.determinant().is_zero() {
                    return ReshapeSearch::Found { coeffs, matrix: m };
                }
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return ReshapeSearch::NoneExists;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] <= n as u64 {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(RESHAPE_SEARCH_SEED);
    let hi = 16 * n as u64;
    for _ in 0..64 * n {
        let coeffs: Vec<Rat> = (0..k)
            .map(|_| rint(rng.gen_range(0..=hi) as i64))
            .collect();
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        let m = combine(&coeffs);
        if !m.determinant().is_zero() {
            return ReshapeSearch::Found { coeffs, matrix: m };
        }
    }
    ReshapeSearch::Inconclusive {
        reason: format!(
            "span dimension {k} exceeds the exhaustive grid bound {max_grid_vars} \
             and random sampling found no nonsingular combination"
        ),
    }
}
