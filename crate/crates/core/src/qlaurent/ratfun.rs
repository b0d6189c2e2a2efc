use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, QError};

/// An element of `Q(q)` stored as a reduced fraction of Laurent polynomials.
///
/// Canonical form: `gcd(num, den)` is a unit, the denominator's lowest term
/// has exponent 0 and a positive coefficient. The zero fraction is `0 / 1`.
/// Two equal fractions are therefore structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lo = den.min_exp().expect("nonzero denominator");
        if lo != 0 {
            num = num.shift(-lo);
            den = den.shift(-lo);
        }
        if den.low_coeff().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the fraction is an honest Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    /// True for `±q^e`.
    pub fn is_unit_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_unit()
    }

    pub fn inv(&self) -> Result<Self, QError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn substitute_neg_inv(&self) -> Self {
        Self::normalized(self.num.substitute_neg_inv(), self.den.substitute_neg_inv())
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<&LaurentPoly> for RatFun {
    fn from(num: &LaurentPoly) -> Self {
        Self::from(num.clone())
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RatFun::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from(&self.num * &rhs.num);
        }
        RatFun::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFun> for &RatFun {
    type Output = Result<RatFun, QError>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFun) -> Result<RatFun, QError> {
        Ok(self * &rhs.inv()?)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

fn write_part(f: &mut fmt::Formatter<'_>, p: &LaurentPoly) -> fmt::Result {
    if p.num_terms() > 1 {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

/// `num / den`, or `num` alone when the denominator is 1. Multi-term parts
/// are parenthesized.
impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write_part(f, &self.num)?;
        write!(f, " / ")?;
        write_part(f, &self.den)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}
