//! Dense univariate polynomials over an exact coefficient ring.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::fmt::Write as _;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient ring bound: exact, comparable, with ring operations.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Dense polynomial; `coeffs[k]` is the coefficient of x^k.
/// Invariant: no trailing zero coefficients (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type ZPoly = Poly<BigInt>;
pub type QPoly = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * x^k.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == T::one()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = 0; callers must handle zero
    /// separately where the distinction matters.
    pub fn deg_or_0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

impl<T: Coeff + Mul<Output = T>> Poly<T> {
    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = coeffs[i + j].clone() + a.clone() * b.clone();
                coeffs[i + j] = t;
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, other: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, other: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - other.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coeff + Mul<Output = T>> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, other: &Poly<T>) -> Poly<T> {
        self.mul_impl(other)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<T: Coeff + Mul<Output = T>> $trait for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, other: Poly<T>) -> Poly<T> {
                (&self).$method(&other)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -(&self)
    }
}

/// Division with remainder over a field coefficient ring.
impl<T: Coeff + Mul<Output = T> + Div<Output = T>> Poly<T> {
    /// Returns (q, r) with self = q * d + r and deg r < deg d.
    /// Panics on a zero divisor; callers must ensure d != 0.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut r = self.clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading().unwrap().clone() / lead.clone();
            q[rd - dd] = c.clone();
            r = &r - &Poly::monomial(c, rd - dd).mul_impl(d);
        }
        (Poly::new(q), r)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "exact_div left a nonzero remainder");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd_monic(a: &Self, b: &Self) -> Self {
        let mut f = a.clone();
        let mut g = b.clone();
        while !g.is_zero() {
            let (_, r) = f.divrem(&g);
            f = g;
            g = r;
        }
        f.monic()
    }
}

impl ZPoly {
    /// Gcd of the coefficients, nonnegative; content of 0 is 0.
    pub fn content(&self) -> BigInt {
        let mut c = BigInt::zero();
        for a in &self.coeffs {
            c = c.gcd(a);
        }
        c
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_positive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        Poly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder: lc(d)^(deg f - deg d + 1) * f = q*d + r with
    /// deg r < deg d.  Only r is returned.
    pub fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        assert!(!d.is_zero(), "pseudo_rem by zero");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading().unwrap().clone();
            r = &r.scale(&lead) - &Poly::monomial(c, rd - dd).mul_impl(d);
        }
        r
    }

    /// Primitive gcd over Z[x] via a primitive pseudo-remainder sequence.
    /// Result is primitive with positive leading coefficient.
    pub fn gcd_primitive(a: &ZPoly, b: &ZPoly) -> ZPoly {
        if a.is_zero() {
            return b.primitive_positive();
        }
        if b.is_zero() {
            return a.primitive_positive();
        }
        let content_gcd = a.content().gcd(&b.content());
        let mut f = a.primitive_positive();
        let mut g = b.primitive_positive();
        if f.deg_or_0() < g.deg_or_0() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g).primitive_positive();
            f = g;
            g = r;
        }
        f.scale(&content_gcd)
    }

    /// Exact division in Z[x]; the divisor must divide without remainder.
    pub fn exact_div_z(&self, d: &ZPoly) -> ZPoly {
        let q = self.to_q().exact_div(&d.to_q());
        Poly::new(
            q.coeffs()
                .iter()
                .map(|c| {
                    assert!(c.denom().is_one(), "exact_div_z: quotient not integral");
                    c.numer().clone()
                })
                .collect(),
        )
    }

    pub fn to_q(&self) -> QPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl QPoly {
    /// Writes self = (z / den) with z an integer polynomial and den the
    /// lcm of the coefficient denominators (den > 0).
    pub fn clear_denominators(&self) -> (ZPoly, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let z = Poly::new(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect(),
        );
        (z, den)
    }

    /// The primitive integer polynomial with positive leading coefficient
    /// that is a rational multiple of self.  Zero maps to zero.
    pub fn primitive_z(&self) -> ZPoly {
        let (z, _) = self.clear_denominators();
        z.primitive_positive()
    }

    /// Monic gcd in Q[x] computed through the primitive integer gcd, which
    /// avoids intermediate coefficient blowup.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let g = ZPoly::gcd_primitive(&a.primitive_z(), &b.primitive_z());
        g.to_q().monic()
    }
}

/// Renders a polynomial in `var` with terms in decreasing degree.
/// Coefficients print through Display; a leading '-' is folded into the
/// separator so output reads like "t^2 - 3*t + 1".
pub fn format_poly<T: Coeff + std::fmt::Display>(p: &Poly<T>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let one = T::one();
    let minus_one = -T::one();
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let body = if k == 0 {
            format!("{c}")
        } else {
            let pow = if k == 1 {
                var.to_string()
            } else {
                format!("{var}^{k}")
            };
            if *c == one {
                pow
            } else if *c == minus_one {
                format!("-{pow}")
            } else {
                format!("{c}*{pow}")
            }
        };
        if out.is_empty() {
            out.push_str(&body);
        } else if let Some(stripped) = body.strip_prefix('-') {
            let _ = write!(out, " - {stripped}");
        } else {
            let _ = write!(out, " + {body}");
        }
    }
    out
}
