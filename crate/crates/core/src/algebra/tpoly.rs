//! Polynomials in t with coefficients in Q(mu): the entries of the matrices
//! whose Smith normal form is taken.  Q(mu)[t] is Euclidean with t-degree
//! as the size function, which is what the elimination relies on.

use super::bipoly::BiPoly;
use super::poly::{Poly, QPoly, ZPoly};
use super::ratfunc::RatFunc;
use num::{BigInt, BigRational, One};
use std::fmt::Write as _;

pub type TPoly = Poly<RatFunc>;

/// Lcm in Z[mu]: (a*b)/gcd(a, b) with positive leading coefficient.
/// lcm(0, x) = 0.
pub fn zpoly_lcm(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() || b.is_zero() {
        return ZPoly::zero();
    }
    let g = ZPoly::gcd_primitive(a, b);
    let mut l = (a * b).exact_div_z(&g);
    if l.leading().is_some_and(num::Signed::is_negative) {
        l = -l;
    }
    l
}

/// Converts a bivariate polynomial (no denominators) into a t-polynomial
/// with rational-function coefficients.
pub fn bipoly_to_tpoly(b: &BiPoly) -> TPoly {
    Poly::new(b.t_rows().iter().map(RatFunc::from_qpoly).collect())
}

/// The common denominator of all coefficients: the Z[mu]-lcm of the
/// RatFunc denominators.
pub fn tpoly_denominator(p: &TPoly) -> ZPoly {
    let mut den = ZPoly::one();
    for c in p.coeffs() {
        den = zpoly_lcm(&den, c.den());
    }
    den
}

/// Clears denominators: returns (b, den) with b = den * p as a bivariate
/// polynomial and den in Z[mu].
pub fn tpoly_clear_denominators(p: &TPoly) -> (BiPoly, ZPoly) {
    let den = tpoly_denominator(p);
    let den_rf = RatFunc::from_poly(den.clone());
    let rows: Vec<QPoly> = p
        .coeffs()
        .iter()
        .map(|c| {
            (c.clone() * den_rf.clone())
                .as_qpoly()
                .expect("denominator clearing failed")
        })
        .collect();
    (BiPoly::new(rows), den)
}

/// Monic normalization in Q(mu)[t]; zero stays zero.
pub fn tpoly_monic(p: &TPoly) -> TPoly {
    match p.leading() {
        None => TPoly::zero(),
        Some(l) => {
            let inv = l.clone().inverse();
            p.scale(&inv)
        }
    }
}

/// The primitive integer bivariate form of a monic t-polynomial over Q(mu):
/// clear denominators, divide by integer content, make the graded-lex
/// leading coefficient positive.
pub fn tpoly_primitive_bipoly(p: &TPoly) -> BiPoly {
    let (b, _) = tpoly_clear_denominators(p);
    b.primitive_normalize()
}

pub fn format_tpoly(p: &TPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let one = RatFunc::one();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero_fn() {
            continue;
        }
        let pow = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        let body = if pow.is_empty() {
            format!("{c}")
        } else if *c == one {
            pow
        } else {
            format!("{c}*{pow}")
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

/// t - c for rational c; convenience for characteristic matrices.
pub fn t_minus(c: i64) -> TPoly {
    Poly::new(vec![RatFunc::from_int(-c), RatFunc::one()])
}

pub fn tpoly_constant_rational(r: &BigRational) -> TPoly {
    TPoly::constant(RatFunc::from_rational(r))
}

pub fn tpoly_from_bigint(v: &BigInt) -> TPoly {
    TPoly::constant(RatFunc::from_poly(ZPoly::constant(v.clone())))
}
