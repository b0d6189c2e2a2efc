//! Polynomial gcd over `Z` via the primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LaurentPoly;

/// Dense ascending coefficients with the lowest exponent shifted to zero.
fn to_dense(p: &LaurentPoly) -> Vec<BigInt> {
    let lo = p.min_exp().unwrap_or(0);
    let hi = p.max_exp().unwrap_or(-1);
    let mut v = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
    for (e, c) in p.terms() {
        v[(e - lo) as usize] = c.clone();
    }
    v
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero, trimmed).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[j + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

pub(super) fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() && b.is_zero() {
        return LaurentPoly::zero();
    }
    if a.is_zero() {
        return normalize(to_dense(b));
    }
    if b.is_zero() {
        return normalize(to_dense(a));
    }
    let (mut x, mut y) = (to_dense(a), to_dense(b));
    let c = content(&x).gcd(&content(&y));
    x = primitive_part(&x);
    y = primitive_part(&y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive_part(&prem(&x, &y));
        x = y;
        y = r;
    }
    let g: Vec<BigInt> = x.iter().map(|v| v * &c).collect();
    normalize(g)
}

/// Strips factors of `q` and makes the lowest coefficient positive.
fn normalize(mut v: Vec<BigInt>) -> LaurentPoly {
    trim(&mut v);
    let p = LaurentPoly::from_terms(v.into_iter().enumerate().map(|(i, c)| (i as i64, c)));
    let Some(lo) = p.min_exp() else {
        return p;
    };
    let p = p.shift(-lo);
    if p.low_coeff().is_some_and(|c| c.is_negative()) {
        -p
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::qint;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_of_quantum_integers() {
        // [4] = [2](q^2 + q^-2) and [6] = [2](q^4 + 1 + q^-4) share exactly [2]
        let g = qint(4).gcd(&qint(6));
        assert_eq!(g, lp("1 + q^2"));
        assert_eq!(qint(3).gcd(&qint(2)), LaurentPoly::one());
    }

    #[test]
    fn gcd_keeps_integer_content() {
        assert_eq!(lp("6 + 6*q").gcd(&lp("4 + 4*q")), lp("2 + 2*q"));
        assert_eq!(lp("-q^-2").gcd(&LaurentPoly::zero()), LaurentPoly::one());
    }
}
