//! The coefficient field Q(mu): quotients of integer polynomials in mu.
//!
//! Normal form: denominator nonzero with positive leading coefficient, and
//! gcd(num, den) = 1 in Z[mu] (including integer contents, so constants
//! reduce like ordinary fractions).

use super::poly::{format_poly, QPoly, ZPoly};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

impl RatFunc {
    fn normalized(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "RatFunc with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: ZPoly::zero(),
                den: ZPoly::one(),
            };
        }
        let g = ZPoly::gcd_primitive(&num, &den);
        let mut num = zpoly_exact_div(&num, &g);
        let mut den = zpoly_exact_div(&den, &g);
        if den.leading().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        RatFunc::normalized(num, den)
    }

    pub fn from_poly(p: ZPoly) -> Self {
        RatFunc {
            num: p,
            den: ZPoly::one(),
        }
    }

    pub fn from_qpoly(p: &QPoly) -> Self {
        let (z, den) = p.clear_denominators();
        RatFunc::normalized(z, ZPoly::constant(den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::normalized(
            ZPoly::constant(r.numer().clone()),
            ZPoly::constant(r.denom().clone()),
        )
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_poly(ZPoly::constant(BigInt::from(c)))
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero_fn(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is constant, i.e. the value lies in Q[mu].
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The value as a polynomial in mu; None if the denominator is nonconstant.
    pub fn as_qpoly(&self) -> Option<QPoly> {
        if !self.is_polynomial() {
            return None;
        }
        let d = BigRational::from_integer(self.den.coeff(0));
        Some(self.num.to_q().scale(&(BigRational::one() / d)))
    }

    pub fn inverse(&self) -> RatFunc {
        assert!(!self.is_zero_fn(), "inverse of zero rational function");
        RatFunc::normalized(self.den.clone(), self.num.clone())
    }

    /// Evaluates at an integer mu; None when the denominator vanishes there.
    pub fn eval(&self, mu: &BigRational) -> Option<BigRational> {
        let d = self.den.to_q().eval(mu);
        if d.is_zero() {
            return None;
        }
        Some(self.num.to_q().eval(mu) / d)
    }
}

/// Exact division in Z[mu]; the divisor must divide (used on gcd factors).
fn zpoly_exact_div(a: &ZPoly, b: &ZPoly) -> ZPoly {
    a.exact_div_z(b)
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(ZPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.is_zero_fn()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(ZPoly::one())
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, other: RatFunc) -> RatFunc {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RatFunc::normalized(num, &self.den * &other.den)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, other: RatFunc) -> RatFunc {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        RatFunc::normalized(num, &self.den * &other.den)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, other: RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &other.num, &self.den * &other.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, other: RatFunc) -> RatFunc {
        assert!(!other.is_zero_fn(), "division by zero rational function");
        RatFunc::normalized(&self.num * &other.den, &self.den * &other.num)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.degree().unwrap_or(0) > 0 {
                write!(f, "({})", format_poly(&self.num, "mu"))
            } else {
                write!(f, "{}", format_poly(&self.num, "mu"))
            }
        } else {
            write!(
                f,
                "({})/({})",
                format_poly(&self.num, "mu"),
                format_poly(&self.den, "mu")
            )
        }
    }
}
