//! Smith normal form over ℚ[λ].
//!
//! `smith_decompose` produces unimodular `U`, `W` with `U·A·W = S` diagonal,
//! the nonzero diagonal entries monic and each dividing the next. The
//! algorithm repeatedly moves a minimal-degree nonzero entry of the working
//! submatrix to the pivot, clears the pivot row and column by division with
//! remainder, and repairs divisibility failures in the remaining submatrix
//! with the add-row trick. Every step strictly shrinks the pivot degree or
//! the submatrix, so the loop terminates without any randomness.

use crate::poly::Poly;
use crate::polymat::PolyMat;
use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// Unimodular row transform.
    pub u: PolyMat,
    /// The diagonal form `U·A·W`.
    pub s: PolyMat,
    /// Unimodular column transform.
    pub w: PolyMat,
    /// Nonzero diagonal entries of `s`, monic, each dividing the next.
    pub invariant_factors: Vec<Poly>,
}

impl SmithDecomposition {
    /// `s₁·s₂·…·s_upto`; the empty product for `upto = 0`.
    /// Panics when `upto` exceeds the number of invariant factors.
    pub fn cumulative_product(&self, upto: usize) -> Poly {
        assert!(
            upto <= self.invariant_factors.len(),
            "index out of range: {upto} invariant factors requested, {} exist",
            self.invariant_factors.len()
        );
        let mut acc = Poly::one();
        for f in &self.invariant_factors[..upto] {
            acc = &acc * f;
        }
        acc
    }

    /// Check `U·A·W = S` against the source matrix.
    pub fn verifies(&self, a: &PolyMat) -> bool {
        &(&self.u * a) * &self.w == self.s
    }
}

/// Minimal-degree nonzero entry of the trailing submatrix starting at
/// `(t, t)`, scanning row-major; ties go to the first visited.
fn min_degree_entry(s: &PolyMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            if let Some(d) = s.at(i, j).degree() {
                if best.is_none_or(|(_, _, bd)| d < bd) {
                    best = Some((i, j, d));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// First submatrix entry not divisible by the pivot `s[t][t]`.
fn first_nondivisible(s: &PolyMat, t: usize) -> Option<(usize, usize)> {
    let pivot = s.at(t, t);
    for i in t + 1..s.rows() {
        for j in t + 1..s.cols() {
            if !s.at(i, j).div_rem(pivot).1.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Smith normal form of any (rectangular) polynomial matrix.
pub fn smith_decompose(a: &PolyMat) -> SmithDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut s = a.clone();
    let mut u = PolyMat::identity(m);
    let mut w = PolyMat::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_degree_entry(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        w.swap_cols(t, pj);

        'pivot: loop {
            for i in t + 1..m {
                if s.at(i, t).is_zero() {
                    continue;
                }
                let (q, r) = s.at(i, t).div_rem(s.at(t, t));
                s.row_sub_scaled(i, t, &q);
                u.row_sub_scaled(i, t, &q);
                if !r.is_zero() {
                    // a strictly smaller-degree entry appeared; promote it
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    continue 'pivot;
                }
            }
            for j in t + 1..n {
                if s.at(t, j).is_zero() {
                    continue;
                }
                let (q, r) = s.at(t, j).div_rem(s.at(t, t));
                s.col_sub_scaled(j, t, &q);
                w.col_sub_scaled(j, t, &q);
                if !r.is_zero() {
                    s.swap_cols(t, j);
                    w.swap_cols(t, j);
                    continue 'pivot;
                }
            }
            // pivot is alone in its row and column
            if let Some((i, _)) = first_nondivisible(&s, t) {
                s.row_add(t, i);
                u.row_add(t, i);
                continue 'pivot;
            }
            break;
        }

        let lead = s.at(t, t).leading();
        if !lead.is_one() {
            let inv = lead.recip();
            s.scale_row(t, &inv);
            u.scale_row(t, &inv);
        }
        t += 1;
    }

    let invariant_factors = (0..m.min(n))
        .map(|i| s.at(i, i).clone())
        .take_while(|p| !p.is_zero())
        .collect();

    SmithDecomposition {
        u,
        s,
        w,
        invariant_factors,
    }
}

/// Equivalence test: two square matrices of the same size are equivalent iff
/// their invariant factor lists coincide. Panics on a shape mismatch.
pub fn are_equivalent(a: &PolyMat, b: &PolyMat) -> bool {
    assert!(a.is_square() && b.is_square(), "equivalence needs square matrices");
    assert_eq!(a.rows(), b.rows(), "dimension mismatch");
    smith_decompose(a).invariant_factors == smith_decompose(b).invariant_factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_polymat, random_unimodular};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    fn check_invariants(a: &PolyMat, d: &SmithDecomposition) {
        assert!(d.verifies(a), "U·A·W != S");
        assert!(d.u.is_unimodular(), "U not unimodular");
        assert!(d.w.is_unimodular(), "W not unimodular");
        for f in &d.invariant_factors {
            assert!(f.is_monic());
        }
        for pair in d.invariant_factors.windows(2) {
            assert!(pair[1].div_rem(&pair[0]).1.is_zero(), "divisibility chain broken");
        }
        // off-diagonal entries of S vanish; zero diagonal entries come last
        for i in 0..d.s.rows() {
            for j in 0..d.s.cols() {
                if i != j {
                    assert!(d.s.at(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn identity_is_its_own_form() {
        let a = PolyMat::identity(3);
        let d = smith_decompose(&a);
        check_invariants(&a, &d);
        assert_eq!(d.invariant_factors, vec![Poly::one(); 3]);
    }

    #[test]
    fn lower_triangular_quartic() {
        // [[1, 0], [λ² + λ, λ⁴]] reduces to diag(1, λ⁴)
        let a = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[0, 1, 1], &[0, 0, 0, 0, 1]]]);
        let d = smith_decompose(&a);
        check_invariants(&a, &d);
        assert_eq!(d.invariant_factors, vec![Poly::one(), p(&[0, 0, 0, 0, 1])]);
    }

    #[test]
    fn companion_style_pair() {
        // [[λ²-3λ+1, 1], [-4λ+1, λ²+λ+1]] reduces to diag(1, λ⁴-2λ³-λ²+2λ)
        let a = PolyMat::from_int_rows(&[
            &[&[1, -3, 1], &[1]],
            &[&[1, -4], &[1, 1, 1]],
        ]);
        let d = smith_decompose(&a);
        check_invariants(&a, &d);
        assert_eq!(d.invariant_factors, vec![Poly::one(), p(&[0, 2, -1, -2, 1])]);
    }

    #[test]
    fn singular_input_gets_zero_tail() {
        // rank-1 matrix: single invariant factor, zero elsewhere on the diagonal
        let a = PolyMat::from_int_rows(&[&[&[0, 1], &[0, 1]], &[&[0, 0, 1], &[0, 0, 1]]]);
        let d = smith_decompose(&a);
        check_invariants(&a, &d);
        assert_eq!(d.invariant_factors.len(), 1);
        assert!(d.s.at(1, 1).is_zero());
    }

    #[test]
    fn rectangular_support() {
        let a = PolyMat::from_int_rows(&[&[&[0, 1], &[1], &[0, 0, 1]]]);
        let d = smith_decompose(&a);
        check_invariants(&a, &d);
        assert_eq!(d.invariant_factors, vec![Poly::one()]);
    }

    #[test]
    fn cumulative_product_examples() {
        let a = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[0, 1, 1], &[0, 0, 0, 0, 1]]]);
        let d = smith_decompose(&a);
        assert_eq!(d.cumulative_product(0), Poly::one());
        assert_eq!(d.cumulative_product(1), Poly::one());
        assert_eq!(d.cumulative_product(2), p(&[0, 0, 0, 0, 1]));
    }

    #[test]
    #[should_panic(expected = "index out of range")]
    fn cumulative_product_out_of_range() {
        let d = smith_decompose(&PolyMat::identity(2));
        let _ = d.cumulative_product(3);
    }

    #[test]
    fn equivalence_examples() {
        let a = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[0, 1, 1], &[0, 0, 0, 0, 1]]]);
        let b = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[0, 2, 1], &[0, 0, 0, 0, 1]]]);
        assert!(are_equivalent(&a, &a));
        assert!(are_equivalent(&a, &b));
        let d1 = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[], &[0, 1]]]);
        let d2 = PolyMat::from_int_rows(&[&[&[1], &[]], &[&[], &[0, 0, 1]]]);
        assert!(!are_equivalent(&d1, &d2));
    }

    #[test]
    fn random_matrices_satisfy_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..60 {
            let n = 1 + trial % 3;
            let a = random_polymat(&mut rng, n, n, 3, 3);
            let d = smith_decompose(&a);
            check_invariants(&a, &d);
        }
    }

    #[test]
    fn unimodular_multiplication_preserves_factors() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let a = random_polymat(&mut rng, 2, 2, 2, 2);
            let u = random_unimodular(&mut rng, 2, 2, 2);
            let w = random_unimodular(&mut rng, 2, 2, 2);
            let b = &(&u * &a) * &w;
            assert_eq!(
                smith_decompose(&a).invariant_factors,
                smith_decompose(&b).invariant_factors
            );
        }
    }
}
