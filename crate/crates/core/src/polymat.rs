//! Matrices over `Poly`: products, Kronecker products, determinants,
//! adjugates, entrywise derivatives and evaluation, and division by a scalar
//! monic modulus.
//!
//! Determinants use cofactor expansion up to 3x3 and fraction-free Bareiss
//! elimination beyond that; Bareiss keeps every intermediate entry a
//! polynomial (each is a minor of the input), so no rational functions
//! appear.

use crate::poly::Poly;
use crate::rational::Rat;
use crate::ratmat::RatMat;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

/// Dense row-major matrix over `Poly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMat {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        PolyMat { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "no rows given");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMat::new(rows, cols, entries)
    }

    /// Rows of ascending-degree integer coefficient slices.
    pub fn from_int_rows(rows: &[&[&[i64]]]) -> Self {
        PolyMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|cs| Poly::from_ints(cs)).collect())
                .collect(),
        )
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMat::new(rows, cols, vec![Poly::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        PolyMat::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
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

    pub fn at(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Largest entry degree; `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn transpose(&self) -> PolyMat {
        PolyMat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Rat) -> PolyMat {
        PolyMat::new(self.rows, self.cols, self.entries.iter().map(|e| e.scale(c)).collect())
    }

    pub fn scale_poly(&self, p: &Poly) -> PolyMat {
        PolyMat::new(self.rows, self.cols, self.entries.iter().map(|e| e * p).collect())
    }

    /// Kronecker product: block `(i,j)` is `self[i][j]·other`.
    pub fn kron(&self, other: &PolyMat) -> PolyMat {
        PolyMat::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let (bi, ri) = (i / other.rows, i % other.rows);
            let (bj, rj) = (j / other.cols, j % other.cols);
            self.at(bi, bj) * other.at(ri, rj)
        })
    }

    /// Entrywise formal derivative of the given order (`order >= 1`).
    pub fn derivative(&self, order: usize) -> PolyMat {
        assert!(order >= 1, "derivative order must be at least 1");
        PolyMat::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e.derivative(order)).collect(),
        )
    }

    /// Entrywise evaluation at a scalar point.
    pub fn eval(&self, x: &Rat) -> RatMat {
        RatMat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).eval(x))
    }

    /// Entrywise division by a scalar monic modulus of degree >= 1:
    /// `self = modulus·q + r` with every entry of `r` of degree below the
    /// modulus.
    pub fn div_rem(&self, modulus: &Poly) -> (PolyMat, PolyMat) {
        assert!(modulus.is_monic(), "modulus must be monic");
        assert!(
            modulus.degree().is_some_and(|d| d >= 1),
            "modulus must have degree at least 1"
        );
        let mut q = Vec::with_capacity(self.entries.len());
        let mut r = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let (eq, er) = e.div_rem(modulus);
            q.push(eq);
            r.push(er);
        }
        (
            PolyMat::new(self.rows, self.cols, q),
            PolyMat::new(self.rows, self.cols, r),
        )
    }

    /// Exact entrywise quotient by a scalar divisor; panics on a nonzero
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly) -> PolyMat {
        PolyMat::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e.div_exact(divisor)).collect(),
        )
    }

    /// Row-major flattening into an `rc x 1` column vector, ordered so that
    /// `col_stack(X·V·Y) = (X ⊗ Yᵀ)·col_stack(V)`.
    pub fn col_stack(&self) -> PolyMat {
        PolyMat::new(self.rows * self.cols, 1, self.entries.clone())
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> PolyMat {
        PolyMat::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let r = if i < skip_r { i } else { i + 1 };
            let c = if j < skip_c { j } else { j + 1 };
            self.at(r, c).clone()
        })
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Poly {
        assert!(self.is_square(), "determinant requires a square matrix");
        let n = self.rows;
        match n {
            1 => self.at(0, 0).clone(),
            2 => &(self.at(0, 0) * self.at(1, 1)) - &(self.at(0, 1) * self.at(1, 0)),
            3 => {
                let mut acc = Poly::zero();
                for j in 0..3 {
                    let term = self.at(0, j) * &self.minor(0, j).determinant();
                    acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
            _ => self.bareiss_determinant(),
        }
    }

    fn bareiss_determinant(&self) -> Poly {
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut negate = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return Poly::zero();
                };
                for j in 0..n {
                    m.swap(p * n + j, k * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&m[i * n + j] * &m[k * n + k]) - &(&m[i * n + k] * &m[k * n + j]);
                    m[i * n + j] = t.div_exact(&prev);
                }
                m[i * n + k] = Poly::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m[n * n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Adjugate: `self · adjugate(self) = det(self) · I`. For 1x1 the
    /// adjugate is `[[1]]`.
    pub fn adjugate(&self) -> PolyMat {
        assert!(self.is_square(), "adjugate requires a square matrix");
        if self.rows == 1 {
            return PolyMat::identity(1);
        }
        PolyMat::from_fn(self.rows, self.cols, |i, j| {
            let cof = self.minor(j, i).determinant();
            if (i + j) % 2 == 0 {
                cof
            } else {
                -cof
            }
        })
    }

    /// True iff the determinant is a nonzero constant.
    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.determinant().degree() == Some(0)
    }

    // ---- In-place row and column operations ----

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_i -= q · row_j`
    pub(crate) fn row_sub_scaled(&mut self, i: usize, j: usize, q: &Poly) {
        assert_ne!(i, j);
        for c in 0..self.cols {
            let t = q * self.at(j, c);
            let e = self.at(i, c) - &t;
            self.set(i, c, e);
        }
    }

    /// `col_i -= q · col_j`
    pub(crate) fn col_sub_scaled(&mut self, i: usize, j: usize, q: &Poly) {
        assert_ne!(i, j);
        for r in 0..self.rows {
            let t = q * self.at(r, j);
            let e = self.at(r, i) - &t;
            self.set(r, i, e);
        }
    }

    /// `row_i += row_j`
    pub(crate) fn row_add(&mut self, i: usize, j: usize) {
        assert_ne!(i, j);
        for c in 0..self.cols {
            let e = self.at(i, c) + self.at(j, c);
            self.set(i, c, e);
        }
    }

    /// Scale a row by a nonzero constant.
    pub(crate) fn scale_row(&mut self, i: usize, c: &Rat) {
        assert!(!c.is_zero());
        for j in 0..self.cols {
            let e = self.at(i, j).scale(c);
            self.set(i, j, e);
        }
    }
}

impl Index<(usize, usize)> for PolyMat {
    type Output = Poly;
    fn index(&self, (r, c): (usize, usize)) -> &Poly {
        self.at(r, c)
    }
}

impl Add for &PolyMat {
    type Output = PolyMat;
    fn add(self, rhs: &PolyMat) -> PolyMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        PolyMat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &PolyMat {
    type Output = PolyMat;
    fn sub(self, rhs: &PolyMat) -> PolyMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        PolyMat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Neg for &PolyMat {
    type Output = PolyMat;
    fn neg(self) -> PolyMat {
        PolyMat::from_fn(self.rows, self.cols, |i, j| -self.at(i, j))
    }
}

impl Mul for &PolyMat {
    type Output = PolyMat;
    fn mul(self, rhs: &PolyMat) -> PolyMat {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        PolyMat::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Poly::zero();
            for k in 0..self.cols {
                acc = &acc + &(self.at(i, k) * rhs.at(k, j));
            }
            acc
        })
    }
}

impl fmt::Display for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let mut widths = vec![0usize; self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                widths[j] = widths[j].max(strs[i * self.cols + j].chars().count());
            }
        }
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                let s = &strs[i * self.cols + j];
                let pad = widths[j] - s.chars().count();
                write!(f, " {}{}", " ".repeat(pad), s)?;
                if j + 1 < self.cols {
                    write!(f, " ")?;
                }
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}
