use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in `z` over `Q`, dense and trimmed (no trailing zeros).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `c0 + c1 z + c2 z^2 + ...`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Quotient and remainder of division by a nonzero `d`.
    ///
    /// # Panics
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quo), Self::from_coeffs(rem))
    }

    /// `Some(self / d)` when the division is exact.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` the monic gcd.
    pub fn xgcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        match r0.lead().cloned() {
            None => (QPoly::zero(), QPoly::zero(), QPoly::zero()),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Display with a chosen variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let body = match i {
                0 => mag.to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i > 0 && !mag.is_one() {
                out.push_str(&format!("{mag}*{body}"));
            } else {
                out.push_str(&body);
            }
        }
        out
    }
}

/// Ascending powers of `z`, exact rationals `p/q`: `1/2 - z + 3*z^2`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn arb_qpoly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-4i64..=4, 1i64..=3), 0..4).prop_map(|cs| {
            QPoly::from_coeffs(
                cs.into_iter()
                    .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                    .collect(),
            )
        })
    }

    #[test]
    fn display() {
        let p = QPoly::from_coeffs(vec![BigRational::new(1.into(), 2.into()), rat(-1), rat(3)]);
        assert_eq!(p.to_string(), "1/2 - z + 3*z^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_ints(&[0, 0, -1]).to_string(), "-z^2");
        assert_eq!(QPoly::from_ints(&[-3, 1]).display_in("x"), "-3 + x");
    }

    #[test]
    fn gcd_examples() {
        // (z-1)(z-2) and (z-1)(z+3)
        let a = QPoly::from_ints(&[2, -3, 1]);
        let b = QPoly::from_ints(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), QPoly::from_ints(&[-1, 1]));
        assert!(QPoly::from_ints(&[1, 1])
            .gcd(&QPoly::from_ints(&[2]))
            .is_one());
    }

    proptest! {
        #[test]
        fn division_identity(a in arb_qpoly(), b in arb_qpoly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }

        #[test]
        fn xgcd_bezout(a in arb_qpoly(), b in arb_qpoly()) {
            let (g, s, t) = QPoly::xgcd(&a, &b);
            prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
            prop_assert_eq!(g.clone(), a.gcd(&b));
            if !g.is_zero() {
                prop_assert!(a.div_exact(&g).is_some() && b.div_exact(&g).is_some());
            }
        }

        #[test]
        fn ring_axioms(a in arb_qpoly(), b in arb_qpoly(), c in arb_qpoly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }
    }
}
