//! Gcd in Q[mu][t], split in the usual way: content with respect to t
//! (a gcd in Q[mu]) times a primitive-part gcd computed by a primitive
//! pseudo-remainder sequence in (Q(mu))[t].

use super::bipoly::BiPoly;
use super::poly::ZPoly;
use crate::error::{Error, Result};

/// Divides out the content with respect to t.
fn primitive_part_wrt_t(p: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return BiPoly::zero();
    }
    let content = p.content_wrt_t();
    p.exact_div_mu(&content.to_q())
}

/// One pseudo-remainder step in t over Q[mu]: scales f by powers of the
/// leading t-coefficient of g so every division is exact.
fn pseudo_rem_t(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let dg = g.deg_t().expect("pseudo_rem_t by zero");
    let lead = g.t_coeff(dg);
    let mut r = f.clone();
    while let Some(dr) = r.deg_t() {
        if dr < dg {
            break;
        }
        let c = r.t_coeff(dr);
        let scaled = r.mul_mu_poly(&lead);
        let sub = g.mul_mu_poly(&c).shift_t_up(dr - dg);
        r = &scaled - &sub;
    }
    r
}

/// Gcd in (Q(mu))[t] of two bivariate polynomials, i.e. ignoring factors
/// that depend on mu alone.  Returns the primitive-normalized integer form.
pub fn gcd_bipoly_t(a: &BiPoly, b: &BiPoly) -> Result<BiPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidInput(
            "gcd of two zero polynomials is undefined".into(),
        ));
    }
    if a.is_zero() {
        return Ok(primitive_part_wrt_t(b).primitive_normalize());
    }
    if b.is_zero() {
        return Ok(primitive_part_wrt_t(a).primitive_normalize());
    }
    let mut f = primitive_part_wrt_t(a).primitive_normalize();
    let mut g = primitive_part_wrt_t(b).primitive_normalize();
    if f.deg_t() < g.deg_t() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem_t(&f, &g);
        let r = if r.is_zero() {
            r
        } else {
            primitive_part_wrt_t(&r).primitive_normalize()
        };
        f = g;
        g = r;
    }
    Ok(primitive_part_wrt_t(&f).primitive_normalize())
}

/// Full gcd in Q[mu][t], normalized to integer coefficients with content 1
/// and positive leading coefficient in graded-lex order (t > mu).
pub fn gcd_bipoly(a: &BiPoly, b: &BiPoly) -> Result<BiPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidInput(
            "gcd of two zero polynomials is undefined".into(),
        ));
    }
    if a.is_zero() {
        return Ok(b.primitive_normalize());
    }
    if b.is_zero() {
        return Ok(a.primitive_normalize());
    }
    let content_gcd = ZPoly::gcd_primitive(&a.content_wrt_t(), &b.content_wrt_t());
    let pp_gcd = gcd_bipoly_t(a, b)?;
    let content_bp = BiPoly::new(vec![content_gcd.to_q()]);
    Ok((&content_bp * &pp_gcd).primitive_normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn t_plus_mu_scaled(k: i64) -> BiPoly {
        &BiPoly::t() + &BiPoly::mu().scale(&q(k))
    }

    /// alpha = t + mu
    fn alpha() -> BiPoly {
        t_plus_mu_scaled(1)
    }

    /// beta = t^2 + 3 mu t + 2 mu^2 - 1 = (t+mu)(t+2mu) - 1
    fn beta() -> BiPoly {
        &(&t_plus_mu_scaled(1) * &t_plus_mu_scaled(2)) - &BiPoly::one()
    }

    /// gamma = t^3 + 6 mu t^2 + (11 mu^2 - 3) t + 6 mu^3 - 5 mu
    fn gamma() -> BiPoly {
        let t = BiPoly::t();
        let mu = BiPoly::mu();
        let t2 = &t * &t;
        let mut p = &t * &t2;
        p = &p + &(&mu * &t2).scale(&q(6));
        p = &p + &(&(&(&mu * &mu).scale(&q(11)) - &BiPoly::from_int(3)) * &t);
        p = &p + &(&(&mu * &mu) * &mu).scale(&q(6));
        &p - &mu.scale(&q(5))
    }

    #[test]
    fn gcd_of_shifted_products_recovers_common_factor() {
        let ab = &alpha() * &beta();
        let bg = &beta() * &gamma();
        let g = gcd_bipoly(&ab, &bg).unwrap();
        assert_eq!(g, beta());
    }

    #[test]
    fn gcd_with_zero_normalizes_the_other_argument() {
        let p = beta().scale(&BigRational::new(BigInt::from(-2), BigInt::from(3)));
        assert_eq!(gcd_bipoly(&p, &BiPoly::zero()).unwrap(), beta());
        assert!(gcd_bipoly(&BiPoly::zero(), &BiPoly::zero()).is_err());
    }

    #[test]
    fn coprime_inputs_give_constant_gcd() {
        let g = gcd_bipoly(&alpha(), &(&alpha() + &BiPoly::one())).unwrap();
        assert_eq!(g, BiPoly::one());
    }

    #[test]
    fn content_factors_participate() {
        // gcd(mu * alpha, mu^2 * beta): contents mu and mu^2, pp coprime-ish
        let mu = BiPoly::mu();
        let a = &mu * &alpha();
        let b = &(&mu * &mu) * &beta();
        let g = gcd_bipoly(&a, &b).unwrap();
        assert_eq!(g, mu);
    }

    #[test]
    fn gcd_divides_both_inputs() {
        let p = &(&alpha() * &beta()) * &gamma();
        let r = &beta() * &gamma();
        let g = gcd_bipoly(&p, &r).unwrap();
        assert_eq!(g, r.primitive_normalize());
        // exact division by the gcd leaves the cofactors
        assert_eq!(p.exact_div(&g), alpha());
    }

    #[test]
    fn wrt_t_variant_drops_mu_only_content() {
        let mu = BiPoly::mu();
        let a = &mu * &beta();
        let b = &(&mu * &mu) * &beta();
        // Over Q(mu), the mu factors are units.
        assert_eq!(gcd_bipoly_t(&a, &b).unwrap(), beta());
    }
}
