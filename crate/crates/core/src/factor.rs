//! Complete factorization into linear factors over ℚ, when one exists.
//!
//! Candidate roots come from the rational-root test: for a primitive integer
//! polynomial, every rational root p/q has p dividing the trailing and q
//! dividing the leading coefficient. Roots found this way are deflated to
//! full multiplicity; a non-constant deflated remainder means the input has
//! an irreducible factor of degree two or more.

use crate::poly::Poly;
use crate::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// `leading · ∏ (λ - root)^multiplicity` with distinct roots, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactorization {
    pub leading: Rat,
    pub factors: Vec<(Rat, usize)>,
}

impl LinearFactorization {
    /// Sum of multiplicities, i.e. the degree of the factored polynomial.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(_, k)| k).sum()
    }

    /// Multiply the factorization back out.
    pub fn to_poly(&self) -> Poly {
        let mut acc = Poly::constant(self.leading.clone());
        for (root, mult) in &self.factors {
            acc = &acc * &Poly::linear_from_root(root).pow(*mult);
        }
        acc
    }

    /// The monic product `∏ (λ - root)^multiplicity`.
    pub fn monic_poly(&self) -> Poly {
        let mut acc = Poly::one();
        for (root, mult) in &self.factors {
            acc = &acc * &Poly::linear_from_root(root).pow(*mult);
        }
        acc
    }
}

/// The input has an irreducible factor of degree >= 2 over ℚ.
#[derive(Clone, Debug, thiserror::Error)]
#[error("no complete splitting over Q; irreducible cofactor {cofactor}")]
pub struct NonSplitting {
    pub cofactor: Poly,
}

/// Factor `p` completely into linear factors over ℚ.
/// Constants yield an empty factor list. Panics on the zero polynomial.
pub fn linear_factorization(p: &Poly) -> Result<LinearFactorization, NonSplitting> {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let leading = p.leading();
    let mut factors: Vec<(Rat, usize)> = Vec::new();
    let mut rem = p.clone();

    // Strip the root at zero first: its multiplicity is the number of
    // leading zero coefficients in ascending order.
    let zero_mult = rem.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        factors.push((Rat::zero(), zero_mult));
        rem = rem.div_exact(&Poly::monomial(Rat::one(), zero_mult));
    }

    if !rem.is_constant() {
        for cand in root_candidates(&rem) {
            let mut mult = 0;
            loop {
                if rem.is_constant() || !rem.eval(&cand).is_zero() {
                    break;
                }
                rem = rem.div_exact(&Poly::linear_from_root(&cand));
                mult += 1;
            }
            if mult > 0 {
                factors.push((cand, mult));
            }
            if rem.is_constant() {
                break;
            }
        }
    }

    if !rem.is_constant() {
        return Err(NonSplitting { cofactor: rem });
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(LinearFactorization { leading, factors })
}

/// Rational-root candidates for a polynomial with nonzero constant term,
/// in ascending order.
fn root_candidates(p: &Poly) -> Vec<Rat> {
    // Clear denominators to an integer polynomial with the same roots.
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * &lcm / c.denom()).collect();
    let trailing = ints.first().expect("nonzero polynomial").clone();
    let lead = ints.last().expect("nonzero polynomial").clone();

    let mut set = BTreeSet::new();
    for num in divisors(&trailing) {
        for den in divisors(&lead) {
            let q = Rat::new(num.clone(), den.clone());
            set.insert(-q.clone());
            set.insert(q);
        }
    }
    set.into_iter().collect()
}

/// Positive divisors of `|v|` for nonzero `v`.
fn divisors(v: &BigInt) -> Vec<BigInt> {
    let v = v.abs();
    assert!(!v.is_zero());
    if let Some(small) = v.to_u64() {
        let mut out = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                out.push(BigInt::from(d));
                if d != small / d {
                    out.push(BigInt::from(small / d));
                }
            }
            d += 1;
        }
        return out;
    }
    // Exact but slow fallback for coefficients beyond u64.
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= v {
        if (&v % &d).is_zero() {
            out.push(d.clone());
            let other = &v / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn quartic_monomial() {
        let f = linear_factorization(&p(&[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.leading, rint(1));
        assert_eq!(f.factors, vec![(rint(0), 4)]);
        assert_eq!(f.degree(), 4);
    }

    #[test]
    fn four_simple_roots() {
        // λ⁴ - 2λ³ - λ² + 2λ = λ(λ-1)(λ+1)(λ-2)
        let f = linear_factorization(&p(&[0, 2, -1, -2, 1])).unwrap();
        assert_eq!(f.leading, rint(1));
        assert_eq!(
            f.factors,
            vec![(rint(-1), 1), (rint(0), 1), (rint(1), 1), (rint(2), 1)]
        );
        assert_eq!(f.to_poly(), p(&[0, 2, -1, -2, 1]));
    }

    #[test]
    fn irreducible_quadratic_is_rejected() {
        let err = linear_factorization(&p(&[1, 0, 1])).unwrap_err();
        assert_eq!(err.cofactor, p(&[1, 0, 1]));
    }

    #[test]
    fn mixed_splitting_rejected_with_cofactor() {
        // λ(λ² + 1): the linear part strips, the quadratic remains
        let err = linear_factorization(&p(&[0, 1, 0, 1])).unwrap_err();
        assert_eq!(err.cofactor, p(&[1, 0, 1]));
    }

    #[test]
    fn fractional_roots_and_leading() {
        // 2(λ - 1/2)²(λ + 3) = 2λ³ + 4λ² - (5/2)λ + 3/4... expand directly instead
        let expected = Poly::constant(rint(2))
            * Poly::linear_from_root(&rat(1, 2)).pow(2)
            * Poly::linear_from_root(&rint(-3));
        let f = linear_factorization(&expected).unwrap();
        assert_eq!(f.leading, rint(2));
        assert_eq!(f.factors, vec![(rint(-3), 1), (rat(1, 2), 2)]);
        assert_eq!(f.to_poly(), expected);
    }

    #[test]
    fn constants_have_empty_factorization() {
        let f = linear_factorization(&Poly::constant(rat(7, 2))).unwrap();
        assert_eq!(f.leading, rat(7, 2));
        assert!(f.factors.is_empty());
        assert_eq!(f.degree(), 0);
        assert_eq!(f.to_poly(), Poly::constant(rat(7, 2)));
    }

    fn arb_factorization() -> impl Strategy<Value = LinearFactorization> {
        let root = (-3i64..=3, 1i64..=2).prop_map(|(n, d)| rat(n, d));
        let lead = (prop_oneof![-4i64..=-1, 1i64..=4], 1i64..=2).prop_map(|(n, d)| rat(n, d));
        (lead, prop::collection::btree_map(root, 1usize..=2, 0..=3)).prop_map(|(leading, m)| {
            LinearFactorization {
                leading,
                factors: m.into_iter().collect(),
            }
        })
    }

    proptest! {
        #[test]
        fn prop_reconstruction_is_exact(f in arb_factorization()) {
            let expanded = f.to_poly();
            let refactored = linear_factorization(&expanded).unwrap();
            prop_assert_eq!(refactored.to_poly(), expanded);
            prop_assert_eq!(refactored, f);
        }

        #[test]
        fn prop_degree_matches(f in arb_factorization()) {
            prop_assert_eq!(Some(f.degree()), f.to_poly().degree());
        }
    }
}
