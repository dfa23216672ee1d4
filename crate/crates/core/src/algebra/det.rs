//! Exact determinants, kernels, and characteristic polynomials.
//!
//! Integer determinants use fraction-free Bareiss elimination.  Polynomial
//! determinants go through evaluation at integer grids followed by Newton
//! interpolation, with one extra off-grid evaluation to catch any
//! under-estimated degree bound.

use super::bipoly::BiPoly;
use super::matrix::{IntMat, Mat, RatMat};
use super::poly::{Poly, QPoly};
use super::ratfunc::RatFunc;
use super::tpoly::{bipoly_to_tpoly, tpoly_clear_denominators, zpoly_lcm, TPoly};
use crate::error::{Error, Result};
use crate::par;
use num::{BigInt, BigRational, Integer, One, Zero};

/// Fraction-free Bareiss determinant over Z.
pub fn det_integer(m: &IntMat) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                // Bareiss: division by the previous pivot is exact.
                a[(i, j)] = num / &prev;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Rational determinant by row-wise denominator clearing plus Bareiss.
pub fn det_rational(m: &RatMat) -> BigRational {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut im = Mat::zeroes(n, n);
    for r in 0..n {
        let mut l = BigInt::one();
        for c in 0..n {
            l = l.lcm(m[(r, c)].denom());
        }
        for c in 0..n {
            let v = &m[(r, c)];
            im[(r, c)] = v.numer() * (&l / v.denom());
        }
        scale *= l;
    }
    BigRational::new(det_integer(&im), scale)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut RatMat) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, pr);
        let inv = BigRational::one() / m[(r, c)].clone();
        for j in c..cols {
            let v = m[(r, j)].clone() * inv.clone();
            m[(r, j)] = v;
        }
        for i in 0..rows {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                for j in c..cols {
                    let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_rational(m: &RatMat) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of the right nullspace {x : Mx = 0}, one vector per free column.
pub fn nullspace_rational(m: &RatMat) -> Vec<Vec<BigRational>> {
    let cols = m.cols();
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[(row, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Gauss-Jordan inverse; None for singular input.
pub fn inverse_rational(m: &RatMat) -> Option<RatMat> {
    assert!(m.is_square());
    let n = m.rows();
    let mut aug = Mat::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m[(r, c)].clone()
        } else if c - n == r {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(Mat::from_fn(n, n, |r, c| aug[(r, n + c)].clone()))
}

/// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
pub fn newton_interpolate(xs: &[BigRational], ys: &[BigRational]) -> QPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if n == 0 {
        return QPoly::zero();
    }
    // Divided differences computed in place.
    let mut dd: Vec<BigRational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].clone() - dd[i - 1].clone();
            let den = xs[i].clone() - xs[i - level].clone();
            dd[i] = num / den;
        }
    }
    let mut p = QPoly::constant(dd[n - 1].clone());
    for k in (0..n - 1).rev() {
        let lin = Poly::new(vec![-xs[k].clone(), BigRational::one()]);
        p = &(&p * &lin) + &QPoly::constant(dd[k].clone());
    }
    p
}

fn q_int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Characteristic polynomial det(xI - M) of a rational matrix, computed by
/// evaluation at x = 0..n and Newton interpolation.  Always monic.
pub fn char_poly_rational(m: &RatMat) -> QPoly {
    assert!(m.is_square());
    let n = m.rows();
    let points: Vec<usize> = (0..=n).collect();
    let values = par::map_vec(points.clone(), |x| {
        let xm = Mat::from_fn(n, n, |r, c| {
            if r == c {
                q_int(x) - m[(r, c)].clone()
            } else {
                -m[(r, c)].clone()
            }
        });
        det_rational(&xm)
    });
    let xs: Vec<BigRational> = points.into_iter().map(q_int).collect();
    let p = newton_interpolate(&xs, &values);
    debug_assert_eq!(p.degree(), Some(n));
    debug_assert!(p.leading().is_some_and(|l| l.is_one()));
    p
}

/// Characteristic polynomial det(xI - M) by similarity reduction to upper
/// Hessenberg form over the rationals, then the classical last-column
/// expansion recurrence.  O(n³) scalar operations in total, against n+1
/// full determinant evaluations for [`char_poly_rational`]; both must agree
/// and the slower route serves as the independent oracle in tests.
pub fn char_poly_hessenberg(m: &RatMat) -> QPoly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return QPoly::one();
    }
    let mut h = m.clone();
    // Each elimination below the first subdiagonal pairs a row operation
    // with the inverse column operation, so h stays similar to m.
    for col in 0..n.saturating_sub(2) {
        let Some(p) = (col + 1..n).find(|&r| !h[(r, col)].is_zero()) else {
            continue;
        };
        if p != col + 1 {
            h.swap_rows(p, col + 1);
            h.swap_cols(p, col + 1);
        }
        let piv = h[(col + 1, col)].clone();
        for r in col + 2..n {
            if h[(r, col)].is_zero() {
                continue;
            }
            let f = &h[(r, col)] / &piv;
            for c in 0..n {
                let sub = &f * &h[(col + 1, c)];
                h[(r, c)] = &h[(r, c)] - &sub;
            }
            for rr in 0..n {
                let add = &f * &h[(rr, r)];
                h[(rr, col + 1)] = &h[(rr, col + 1)] + &add;
            }
        }
    }
    // p_m(x) = (x − h_mm) p_{m−1}(x) − Σ_i h_im (Π_k h_{k,k−1}) p_{i−1}(x),
    // the expansion of det(xI − H) along the last column of the leading
    // m×m block; the product runs over the subdiagonal entries between the
    // expansion row and the block edge.
    let mut ps: Vec<QPoly> = Vec::with_capacity(n + 1);
    ps.push(QPoly::one());
    for m_sz in 1..=n {
        let last = m_sz - 1;
        let lin = Poly::new(vec![-h[(last, last)].clone(), BigRational::one()]);
        let mut p = &lin * &ps[m_sz - 1];
        let mut prod = BigRational::one();
        for i in (0..last).rev() {
            prod *= &h[(i + 1, i)];
            if prod.is_zero() {
                break;
            }
            let coef = &h[(i, last)] * &prod;
            if !coef.is_zero() {
                p = &p - &ps[i].scale(&coef);
            }
        }
        ps.push(p);
    }
    ps.pop().expect("nonempty by construction")
}

/// Determinant of a matrix of bivariate polynomials by grid evaluation and
/// two-stage interpolation.  `bounds` caps the (t, mu) degrees of the
/// result; when absent, row-sum bounds derived from the entries are used.
/// A verification evaluation at an off-grid point guards the bounds.
pub fn det_bipoly(m: &Mat<BiPoly>, bounds: Option<(usize, usize)>) -> Result<BiPoly> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Ok(BiPoly::one());
    }
    let (dt, dm) = bounds.unwrap_or_else(|| {
        let mut dt = 0;
        let mut dm = 0;
        for r in 0..n {
            let mut row_t = 0;
            let mut row_m = 0;
            for c in 0..n {
                row_t = row_t.max(m[(r, c)].deg_t().unwrap_or(0));
                row_m = row_m.max(m[(r, c)].deg_mu().unwrap_or(0));
            }
            dt += row_t;
            dm += row_m;
        }
        (dt, dm)
    });

    let eval_det = |t: &BigRational, mu: &BigRational| -> BigRational {
        let rm = Mat::from_fn(n, n, |r, c| m[(r, c)].eval(t, mu));
        det_rational(&rm)
    };

    // Grid evaluation, parallel over all points.
    let grid: Vec<(usize, usize)> = (0..=dm)
        .flat_map(|j| (0..=dt).map(move |i| (i, j)))
        .collect();
    let values = par::map_vec(grid, |(i, j)| eval_det(&q_int(i), &q_int(j)));

    let t_nodes: Vec<BigRational> = (0..=dt).map(q_int).collect();
    let mu_nodes: Vec<BigRational> = (0..=dm).map(q_int).collect();

    // Interpolate in t for each mu node, then in mu per t-coefficient.
    let per_mu: Vec<QPoly> = par::map_vec((0..=dm).collect::<Vec<_>>(), |j| {
        let ys: Vec<BigRational> = (0..=dt)
            .map(|i| values[j * (dt + 1) + i].clone())
            .collect();
        newton_interpolate(&t_nodes, &ys)
    });
    let mut rows = Vec::with_capacity(dt + 1);
    for d in 0..=dt {
        let ys: Vec<BigRational> = per_mu.iter().map(|p| p.coeff(d)).collect();
        rows.push(newton_interpolate(&mu_nodes, &ys));
    }
    let result = BiPoly::new(rows);

    // Off-grid check: catches any bound that was too small.
    let vt = q_int(dt + 1);
    let vm = q_int(dm + 1);
    if result.eval(&vt, &vm) != eval_det(&vt, &vm) {
        return Err(Error::DegreeBound(format!(
            "bivariate determinant exceeds bounds (deg_t <= {dt}, deg_mu <= {dm})"
        )));
    }
    Ok(result)
}

/// Determinant of a matrix over Q(mu)[t].  Denominators are cleared row by
/// row (a unit scaling in Q(mu)), the polynomial determinant is interpolated,
/// and the scaling is divided back out.
pub fn det_tpoly(m: &Mat<TPoly>) -> Result<TPoly> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Ok(TPoly::one());
    }
    let mut scale = RatFunc::one();
    let mut bm = Mat::filled(n, n, BiPoly::zero());
    for r in 0..n {
        let mut row_den = super::poly::ZPoly::one();
        for c in 0..n {
            row_den = zpoly_lcm(&row_den, &tpoly_denominator_entrywise(&m[(r, c)]));
        }
        let den_rf = RatFunc::from_poly(row_den.clone());
        for c in 0..n {
            let scaled = m[(r, c)].scale(&den_rf);
            let (b, rem_den) = tpoly_clear_denominators(&scaled);
            debug_assert!(rem_den.is_one(), "row denominator clearing incomplete");
            bm[(r, c)] = b;
        }
        scale = scale * den_rf;
    }
    let b = det_bipoly(&bm, None)?;
    let unscaled = bipoly_to_tpoly(&b).scale(&scale.inverse());
    Ok(unscaled)
}

fn tpoly_denominator_entrywise(p: &TPoly) -> super::poly::ZPoly {
    super::tpoly::tpoly_denominator(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Ratio;

    fn imat(n: usize, vals: &[i64]) -> IntMat {
        Mat::from_fn(n, n, |r, c| BigInt::from(vals[r * n + c]))
    }

    fn q(n: i64, d: i64) -> BigRational {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    /// Cofactor-expansion determinant: the independent oracle that the
    /// elimination and interpolation routines are checked against.
    fn det_laplace_int(m: &IntMat) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = BigInt::zero();
        for c in 0..n {
            if m[(0, c)].is_zero() {
                continue;
            }
            let sub = m.minor_matrix(0, c);
            let term = &m[(0, c)] * det_laplace_int(&sub);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn det_laplace_bipoly(m: &Mat<BiPoly>) -> BiPoly {
        let n = m.rows();
        if n == 0 {
            return BiPoly::one();
        }
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = BiPoly::zero();
        for c in 0..n {
            let sub = m.minor_matrix(0, c);
            let term = &m[(0, c)] * &det_laplace_bipoly(&sub);
            if c % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    #[test]
    fn bareiss_matches_hand_values() {
        assert_eq!(det_integer(&IntMat::identity(4)), BigInt::one());
        assert_eq!(det_integer(&imat(2, &[2, 1, 1, 2])), BigInt::from(3));
        // Singular.
        assert_eq!(det_integer(&imat(2, &[1, 2, 2, 4])), BigInt::zero());
        // Needs a row swap.
        assert_eq!(det_integer(&imat(2, &[0, 1, 1, 0])), BigInt::from(-1));
    }

    #[test]
    fn bareiss_matches_laplace_oracle_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let m = Mat::from_fn(6, 6, |_, _| BigInt::from(rng.gen_range(-9i64..=9)));
            assert_eq!(det_integer(&m), det_laplace_int(&m));
        }
    }

    #[test]
    fn det_rational_clears_denominators() {
        let m = Mat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) => q(1, 2),
            (0, 1) => q(1, 3),
            (1, 0) => q(1, 5),
            _ => q(1, 7),
        });
        // 1/14 - 1/15 = 1/210
        assert_eq!(det_rational(&m), q(1, 210));
    }

    #[test]
    fn nullspace_solves_the_system() {
        // x + y + z = 0, x - z = 0 -> dim 1, (1, -2, 1)
        let m = Mat::from_fn(2, 3, |r, c| match (r, c) {
            (0, _) => q(1, 1),
            (1, 0) => q(1, 1),
            (1, 2) => q(-1, 1),
            _ => q(0, 1),
        });
        let basis = nullspace_rational(&m);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert_eq!(v[0].clone() + v[1].clone() + v[2].clone(), q(0, 1));
        assert_eq!(v[0].clone() - v[2].clone(), q(0, 1));
    }

    #[test]
    fn inverse_round_trips() {
        let m = Mat::from_fn(3, 3, |r, c| {
            if r == c {
                q(2, 1)
            } else if r < c {
                q(1, 1)
            } else {
                q(0, 1)
            }
        });
        let inv = inverse_rational(&m).unwrap();
        let prod = super::super::matrix::mat_mul(&m, &inv);
        assert_eq!(prod, RatMat::identity(3));
        assert!(inverse_rational(&Mat::from_fn(2, 2, |_, _| q(1, 1))).is_none());
    }

    #[test]
    fn newton_interpolation_recovers_polynomial() {
        // p(x) = x^3 - 2x + 5
        let p = Poly::new(vec![q(5, 1), q(-2, 1), q(0, 1), q(1, 1)]);
        let xs: Vec<BigRational> = (0..4).map(|i| q(i, 1)).collect();
        let ys: Vec<BigRational> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(newton_interpolate(&xs, &ys), p);
    }

    #[test]
    fn char_poly_small_cases() {
        // 2x2 adjacency of an edge: t^2 - 1.
        let m = Mat::from_fn(2, 2, |r, c| if r != c { q(1, 1) } else { q(0, 1) });
        let p = char_poly_rational(&m);
        assert_eq!(p, Poly::new(vec![q(-1, 1), q(0, 1), q(1, 1)]));
        // Zero matrix: t^n.
        let z = RatMat::zeroes(3, 3);
        assert_eq!(char_poly_rational(&z), Poly::new(vec![q(0, 1), q(0, 1), q(0, 1), q(1, 1)]));
    }

    /// Leverrier-Faddeev oracle: trace-based characteristic coefficients,
    /// entirely independent of determinants and interpolation.
    fn char_poly_leverrier(m: &RatMat) -> QPoly {
        let n = m.rows();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut mk = RatMat::identity(n);
        for k in 1..=n {
            mk = super::super::matrix::mat_mul(m, &mk);
            let mut tr = BigRational::zero();
            for i in 0..n {
                tr += mk[(i, i)].clone();
            }
            let c = -tr / BigRational::from_integer(BigInt::from(k));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                mk[(i, i)] += c.clone();
            }
        }
        Poly::new(coeffs)
    }

    #[test]
    fn char_poly_matches_leverrier_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..10 {
            let m = Mat::from_fn(5, 5, |_, _| q(rng.gen_range(-4i64..=4), 1));
            assert_eq!(char_poly_rational(&m), char_poly_leverrier(&m));
        }
    }

    #[test]
    fn det_bipoly_on_edge_matrix() {
        // [[t+mu, -1], [-1, t+mu]] -> (t+mu)^2 - 1
        let tp = &BiPoly::t() + &BiPoly::mu();
        let m = Mat::from_fn(2, 2, |r, c| {
            if r == c {
                tp.clone()
            } else {
                BiPoly::from_int(-1)
            }
        });
        let d = det_bipoly(&m, Some((2, 2))).unwrap();
        let expect = &(&tp * &tp) - &BiPoly::one();
        assert_eq!(d, expect);
    }

    #[test]
    fn det_bipoly_matches_laplace_oracle_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..6 {
            let m = Mat::from_fn(5, 5, |_, _| {
                let mut p = BiPoly::zero();
                for i in 0..2 {
                    for j in 0..2 {
                        let c = rng.gen_range(-3i64..=3);
                        if c != 0 {
                            p = &p + &BiPoly::monomial(q(c, 1), i, j);
                        }
                    }
                }
                p
            });
            let fast = det_bipoly(&m, None).unwrap();
            assert_eq!(fast, det_laplace_bipoly(&m));
        }
    }

    #[test]
    fn det_bipoly_rejects_undersized_bounds() {
        let tp = &BiPoly::t() + &BiPoly::mu();
        let m = Mat::from_fn(2, 2, |r, c| {
            if r == c {
                tp.clone()
            } else {
                BiPoly::zero()
            }
        });
        let err = det_bipoly(&m, Some((1, 0))).unwrap_err();
        assert!(matches!(err, Error::DegreeBound(_)));
    }

    #[test]
    fn det_tpoly_handles_rational_function_entries() {
        use super::super::poly::ZPoly;
        // [[t, 1/mu], [0, t]] -> t^2 (denominators cleared and restored)
        let t: TPoly = Poly::new(vec![RatFunc::zero(), RatFunc::one()]);
        let inv_mu = TPoly::constant(RatFunc::new(
            ZPoly::one(),
            Poly::new(vec![BigInt::zero(), BigInt::one()]),
        ));
        let m = Mat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) | (1, 1) => t.clone(),
            (0, 1) => inv_mu.clone(),
            _ => TPoly::zero(),
        });
        let d = det_tpoly(&m).unwrap();
        assert_eq!(d, &t * &t);
        // And an off-diagonal contribution with denominators:
        // [[t, 1/mu], [mu, t]] -> t^2 - 1
        let mu_entry = TPoly::constant(RatFunc::from_poly(Poly::new(vec![
            BigInt::zero(),
            BigInt::one(),
        ])));
        let m2 = Mat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) | (1, 1) => t.clone(),
            (0, 1) => inv_mu.clone(),
            _ => mu_entry.clone(),
        });
        let d2 = det_tpoly(&m2).unwrap();
        let expect = &(&t * &t) - &TPoly::one();
        assert_eq!(d2, expect);
    }

    #[test]
    fn hessenberg_char_poly_known_values() {
        // Empty and 1x1.
        assert_eq!(char_poly_hessenberg(&RatMat::identity(0)), QPoly::one());
        let one = Mat::from_fn(1, 1, |_, _| q(5, 1));
        assert_eq!(
            char_poly_hessenberg(&one),
            Poly::new(vec![q(-5, 1), q(1, 1)])
        );
        // Companion matrix of x^3 - 2x - 7.
        let comp = Mat::from_fn(3, 3, |r, c| match (r, c) {
            (0, 2) => q(7, 1),
            (1, 0) => q(1, 1),
            (1, 2) => q(2, 1),
            (2, 1) => q(1, 1),
            _ => q(0, 1),
        });
        assert_eq!(
            char_poly_hessenberg(&comp),
            Poly::new(vec![q(-7, 1), q(-2, 1), q(0, 1), q(1, 1)])
        );
        // Diagonal matrix: product of linear factors; exercises the
        // zero-pivot skip path.
        let diag = Mat::from_fn(3, 3, |r, c| if r == c { q(r as i64, 1) } else { q(0, 1) });
        assert_eq!(
            char_poly_hessenberg(&diag),
            Poly::new(vec![q(0, 1), q(2, 1), q(-3, 1), q(1, 1)])
        );
    }

    #[test]
    fn hessenberg_matches_interpolation_oracle_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for trial in 0..40 {
            let n = rng.gen_range(1..=6);
            // Sparse-ish entries so zero pivots and decoupled blocks occur.
            let m = Mat::from_fn(n, n, |_, _| {
                if rng.gen_bool(0.4) {
                    q(0, 1)
                } else {
                    q(rng.gen_range(-5..=5), 1)
                }
            });
            assert_eq!(
                char_poly_hessenberg(&m),
                char_poly_rational(&m),
                "trial {trial}"
            );
        }
    }

    #[test]
    fn hessenberg_handles_permuted_pivot_rows() {
        // First subdiagonal candidate is zero, forcing the swap branch.
        let m = Mat::from_fn(3, 3, |r, c| match (r, c) {
            (0, 0) => q(1, 1),
            (2, 0) => q(3, 1),
            (0, 1) => q(2, 1),
            (1, 2) => q(4, 1),
            _ => q(0, 1),
        });
        assert_eq!(char_poly_hessenberg(&m), char_poly_rational(&m));
    }
}
