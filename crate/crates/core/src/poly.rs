//! Univariate polynomials over `Rat`.
//!
//! Coefficients are stored in ascending degree order. The zero polynomial is
//! the empty vector; otherwise the last coefficient is nonzero. Every
//! constructor and operation restores that form.

use crate::rational::{rint, Rat};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c·λ^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// `λ - root`.
    pub fn linear_from_root(root: &Rat) -> Self {
        Poly::from_coeffs(vec![-root, Rat::one()])
    }

    /// Ascending-degree coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rint(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `λ^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Scalar multiple `c·self`.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Monic multiple of `self`. Panics on the zero polynomial.
    pub fn monic(&self) -> Poly {
        assert!(!self.is_zero(), "zero polynomial has no monic form");
        self.scale(&self.leading().recip())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Formal derivative of the given order (`order >= 1`).
    pub fn derivative(&self, order: usize) -> Poly {
        assert!(order >= 1, "derivative order must be at least 1");
        let mut cur = self.derivative_once();
        for _ in 1..order {
            cur = cur.derivative_once();
        }
        cur
    }

    fn derivative_once(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rint(i as i64 + 1))
                .collect(),
        )
    }

    /// Euclidean division: `self = divisor·q + r` with `deg r < deg divisor`.
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] * &lead_inv;
            for j in 0..db {
                let t = &c * &divisor.coeffs[j];
                rem[k - db + j] = &rem[k - db + j] - &t;
            }
            rem[k] = Rat::zero();
            quot[k - db] = c;
        }
        rem.truncate(db);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient; panics when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// `self^k` (with `self^0 = 1`).
    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

/// Monic greatest common divisor. Panics when both inputs are zero.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    assert!(
        !(a.is_zero() && b.is_zero()),
        "gcd of two zero polynomials is undefined"
    );
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r;
    }
    x.monic()
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    if mag.is_integer() {
                        write!(f, "{}", mag)?;
                    } else {
                        write!(f, "({})", mag)?;
                    }
                }
                write!(f, "λ")?;
                if k >= 2 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn canonical_trimming() {
        assert_eq!(Poly::from_coeffs(vec![rint(0), rint(0)]), Poly::zero());
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn div_rem_exact_quotient() {
        // (λ² - 1) / (λ - 1) = λ + 1, remainder 0
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn div_rem_low_degree_dividend() {
        let (q, r) = p(&[0, 1]).div_rem(&p(&[0, 0, 1]));
        assert!(q.is_zero());
        assert_eq!(r, p(&[0, 1]));
    }

    #[test]
    fn div_rem_quartic_by_linear() {
        // (λ⁴ - 2λ³ - λ² + 2λ) / (λ - 2); multiply-back check pins the quotient
        let a = p(&[0, 2, -1, -2, 1]);
        let b = p(&[-2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&b * &q + r.clone(), a);
        assert!(r.is_zero());
        assert_eq!(q, p(&[0, -1, 0, 1]));
    }

    #[test]
    #[should_panic(expected = "division by zero polynomial")]
    fn div_rem_by_zero_panics() {
        let _ = p(&[1, 1]).div_rem(&Poly::zero());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[0, 1]), &p(&[1, 1])), Poly::one());
        // gcd((λ-1)⁴(λ+2), (λ-1)²) = (λ-1)²
        let f = p(&[-1, 1]).pow(4) * p(&[2, 1]);
        let g = p(&[-1, 1]).pow(2);
        assert_eq!(poly_gcd(&f, &g), g);
        assert_eq!(poly_gcd(&p(&[0, 3]), &Poly::zero()), p(&[0, 1]));
    }

    #[test]
    #[should_panic(expected = "gcd of two zero polynomials")]
    fn gcd_both_zero_panics() {
        let _ = poly_gcd(&Poly::zero(), &Poly::zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 0, 0, 0, 1]).derivative(1), p(&[0, 0, 0, 4]));
        assert_eq!(p(&[7]).derivative(1), Poly::zero());
        assert_eq!(Poly::zero().derivative(3), Poly::zero());
        // third derivative of -(λ⁴ + 3λ³ + 2λ²) at 0 is -18
        let f = -&p(&[0, 0, 2, 3, 1]);
        assert_eq!(f.derivative(3).eval(&rint(0)), rint(-18));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 0, 1]).eval(&rint(2)), rint(5));
        assert_eq!(p(&[0, 2, -1, -2, 1]).eval(&rint(2)), rint(0));
        assert_eq!(Poly::zero().eval(&rat(7, 3)), rint(0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, 2, -1, -2, 1]).to_string(), "λ^4 - 2λ^3 - λ^2 + 2λ");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-λ");
        let half = Poly::from_coeffs(vec![rint(0), rint(0), rat(3, 2)]);
        assert_eq!(half.to_string(), "(3/2)λ^2");
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((-6i64..=6, 1i64..=3), 0..=max_deg + 1)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn prop_div_rem_roundtrip(a in arb_poly(6), b in arb_poly(4)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&b * &q) + &r, a);
            prop_assert!(r.degree().is_none_or(|dr| dr < b.degree().unwrap()));
        }

        #[test]
        fn prop_leibniz_rule(a in arb_poly(5), b in arb_poly(5)) {
            let lhs = (&a * &b).derivative(1);
            let rhs = &(&a.derivative(1) * &b) + &(&a * &b.derivative(1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_derivative_linear(a in arb_poly(5), b in arb_poly(5)) {
            prop_assert_eq!((&a + &b).derivative(1), &a.derivative(1) + &b.derivative(1));
        }

        #[test]
        fn prop_gcd_divides_both_and_monic(a in arb_poly(4), b in arb_poly(4)) {
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = poly_gcd(&a, &b);
            prop_assert!(g.is_monic());
            if !a.is_zero() {
                prop_assert!(a.div_rem(&g).1.is_zero());
            }
            if !b.is_zero() {
                prop_assert!(b.div_rem(&g).1.is_zero());
            }
        }
    }
}
