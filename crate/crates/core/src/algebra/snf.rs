//! Smith normal form over Q(mu)[t], which is Euclidean in the t-degree,
//! and determinant divisors (gcds of k x k minors).
//!
//! Unimodular operations here are: row/column swaps, adding a Q(mu)[t]
//! multiple of one row/column to another, and scaling a row/column by a
//! unit, i.e. a nonzero element of Q(mu).  Unit scalings are used freely to
//! keep rows in primitive integer form, which is what keeps intermediate
//! coefficients small.

use super::bipoly::BiPoly;
use super::det::{char_poly_hessenberg, det_tpoly, newton_interpolate, rank_rational, rref};
use super::gcd::gcd_bipoly_t;
use super::matrix::{Mat, RatMat};
use super::poly::{Poly, QPoly, ZPoly};
use super::ratfunc::RatFunc;
use super::tpoly::{
    bipoly_to_tpoly, tpoly_clear_denominators, tpoly_monic, tpoly_primitive_bipoly, zpoly_lcm,
    TPoly,
};
use crate::error::{Error, Result};
use crate::par;
use itertools::Itertools;
use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Limit on C(rows, k) * C(cols, k) below which determinant divisors are
/// computed by direct minor enumeration.
pub const MINOR_ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug)]
pub struct SnfResult {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Monic invariant factors d_1 | d_2 | ... | d_rank.
    pub invariant_factors: Vec<TPoly>,
    /// The same factors as primitive integer bivariate polynomials with
    /// positive graded-lex leading coefficient.
    pub primitive_factors: Vec<BiPoly>,
    /// Product of invariant factors agreed with an independently computed
    /// determinant (square matrices only; vacuously true otherwise).
    pub det_recheck: bool,
}

impl SnfResult {
    /// Equality of Smith normal forms: same shape and same monic factors.
    pub fn same_factors(&self, other: &SnfResult) -> bool {
        self.invariant_factors == other.invariant_factors
    }

    /// True when the form is diag(1, ..., 1, d) with n - 1 trivial factors.
    pub fn is_ones_then_single_nontrivial(&self) -> bool {
        if self.rank == 0 {
            return false;
        }
        self.invariant_factors[..self.rank - 1]
            .iter()
            .all(|f| f.degree() == Some(0))
            && self.invariant_factors[self.rank - 1].degree().unwrap_or(0) > 0
    }
}

fn bigint_bits(v: &BigInt) -> u64 {
    if v.sign() == Sign::NoSign {
        0
    } else {
        v.bits()
    }
}

fn zpoly_bits(p: &ZPoly) -> u64 {
    p.coeffs().iter().map(bigint_bits).sum()
}

/// Total coefficient size, the tie-breaker for pivot selection.
fn tpoly_bits(p: &TPoly) -> u64 {
    p.coeffs()
        .iter()
        .map(|c| zpoly_bits(c.num()) + zpoly_bits(c.den()))
        .sum()
}

/// Rescales a row by a unit of Q(mu) so all entries become integer
/// polynomials with overall content 1.
fn normalize_row(m: &mut Mat<TPoly>, row: usize, from_col: usize) {
    let mut den = ZPoly::one();
    for c in from_col..m.cols() {
        for coeff in m[(row, c)].coeffs() {
            den = zpoly_lcm(&den, coeff.den());
        }
    }
    let mut content = ZPoly::zero();
    for c in from_col..m.cols() {
        let scaled = m[(row, c)].scale(&RatFunc::from_poly(den.clone()));
        for coeff in scaled.coeffs() {
            debug_assert!(coeff.den().is_one());
            content = ZPoly::gcd_primitive(&content, coeff.num());
        }
    }
    if content.is_zero() {
        return;
    }
    let unit = RatFunc::new(den, content);
    for c in from_col..m.cols() {
        let v = m[(row, c)].scale(&unit);
        m[(row, c)] = v;
    }
}

fn pivot_candidate(m: &Mat<TPoly>, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize, u64)> = None;
    for r in from..m.rows() {
        for c in from..m.cols() {
            let e = &m[(r, c)];
            let Some(deg) = e.degree() else { continue };
            let bits = tpoly_bits(e);
            let better = match best {
                None => true,
                Some((_, _, bd, bb)) => (deg, bits) < (bd, bb),
            };
            if better {
                best = Some((r, c, deg, bits));
            }
        }
    }
    best.map(|(r, c, _, _)| (r, c))
}

fn row_sub_scaled(m: &mut Mat<TPoly>, target: usize, source: usize, q: &TPoly, from_col: usize) {
    if q.is_zero() {
        return;
    }
    for c in from_col..m.cols() {
        let v = &m[(target, c)] - &(q * &m[(source, c)]);
        m[(target, c)] = v;
    }
}

fn col_sub_scaled(m: &mut Mat<TPoly>, target: usize, source: usize, q: &TPoly, from_row: usize) {
    if q.is_zero() {
        return;
    }
    for r in from_row..m.rows() {
        let v = &m[(r, target)] - &(q * &m[(r, source)]);
        m[(r, target)] = v;
    }
}

/// Monic gcd in Q(mu)[t], through the primitive bivariate gcd so mu-only
/// factors (units here) never inflate the result.
pub fn tpoly_gcd_monic(a: &TPoly, b: &TPoly) -> Result<TPoly> {
    if a.is_zero() && b.is_zero() {
        return Ok(TPoly::zero());
    }
    let (ab, _) = tpoly_clear_denominators(a);
    let (bb, _) = tpoly_clear_denominators(b);
    let g = gcd_bipoly_t(&ab, &bb)?;
    Ok(tpoly_monic(&bipoly_to_tpoly(&g)))
}

fn tpoly_divides(d: &TPoly, n: &TPoly) -> bool {
    if d.is_zero() {
        return n.is_zero();
    }
    let (_, r) = n.divrem(d);
    r.is_zero()
}

/// Reads a matrix of the shape tI - X, with X constant in t and polynomial
/// in mu, off a pencil.  Returns X (entrywise negated constant parts) and
/// the largest mu-degree, or None when the matrix has a different shape.
fn pencil_constant_part(m: &Mat<TPoly>) -> Option<(Mat<QPoly>, usize)> {
    let n = m.rows();
    if n != m.cols() || n < 2 {
        return None;
    }
    let mut mu_deg = 0usize;
    let mut entries = vec![vec![QPoly::zero(); n]; n];
    for r in 0..n {
        for c in 0..n {
            let e = &m[(r, c)];
            if e.degree().unwrap_or(0) > 1 {
                return None;
            }
            let lin = e.coeff(1);
            let expected = if r == c {
                RatFunc::from_int(1)
            } else {
                RatFunc::from_int(0)
            };
            if lin != expected {
                return None;
            }
            let constant = e.coeff(0);
            let q = constant.as_qpoly()?;
            mu_deg = mu_deg.max(q.degree().unwrap_or(0));
            entries[r][c] = -q;
        }
    }
    Some((Mat::from_fn(n, n, |r, c| entries[r][c].clone()), mu_deg))
}

fn specialize(x: &Mat<QPoly>, mu0: &BigRational) -> RatMat {
    RatMat::from_fn(x.rows(), x.cols(), |r, c| x[(r, c)].eval(mu0))
}

fn matvec(x: &RatMat, v: &[BigRational]) -> Vec<BigRational> {
    let n = x.rows();
    let mut out = vec![BigRational::zero(); n];
    for (row, slot) in out.iter_mut().enumerate() {
        for (k, vk) in v.iter().enumerate() {
            if !x[(row, k)].is_zero() {
                *slot += &x[(row, k)] * vk;
            }
        }
    }
    out
}

/// p(X) v by Horner's rule.
fn apply_poly(x: &RatMat, p: &QPoly, v: &[BigRational]) -> Vec<BigRational> {
    let mut r = vec![BigRational::zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        r = matvec(x, &r);
        for (slot, vk) in r.iter_mut().zip(v) {
            *slot += c * vk;
        }
    }
    r
}

fn annihilates_matrix(x: &RatMat, p: &QPoly) -> bool {
    let n = x.rows();
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        if apply_poly(x, p, &e).iter().any(|v| !v.is_zero()) {
            return false;
        }
    }
    true
}

/// The monic annihilator of smallest degree of a single vector: the first
/// Krylov column dependent on its predecessors, with the dependence
/// coefficients read off one reduced echelon form.
fn vector_annihilator(x: &RatMat, v: &[BigRational]) -> QPoly {
    let n = x.rows();
    let mut krylov = RatMat::from_fn(n, n + 1, |_, _| BigRational::zero());
    let mut w = v.to_vec();
    for col in 0..=n {
        for row in 0..n {
            krylov[(row, col)] = w[row].clone();
        }
        if col < n {
            w = matvec(x, &w);
        }
    }
    let pivots = rref(&mut krylov);
    // The first column outside the pivot list is the first dependent one;
    // columns before it are pivots in order, so the reduced matrix holds
    // the dependence coefficients directly.
    let d = (0..=n)
        .find(|c| !pivots.contains(c))
        .expect("n + 1 Krylov columns cannot all be independent");
    let mut coeffs = Vec::with_capacity(d + 1);
    for i in 0..d {
        coeffs.push(-krylov[(i, d)].clone());
    }
    coeffs.push(BigRational::one());
    QPoly::new(coeffs)
}

fn qpoly_lcm_monic(a: &QPoly, b: &QPoly) -> QPoly {
    let g = Poly::gcd(a, b);
    (a * b).divrem(&g).0.monic()
}

/// Exact minimal polynomial of a rational matrix.  Vector annihilators
/// divide the minimal polynomial and their lcm is verified to annihilate
/// the whole matrix, which makes it the minimal polynomial itself.  The
/// standard basis sweep guarantees termination.
fn minpoly_rational(x: &RatMat, rng: &mut ChaCha8Rng) -> QPoly {
    let n = x.rows();
    let mut m = QPoly::one();
    let mut vectors: Vec<Vec<BigRational>> = (0..2)
        .map(|_| {
            (0..n)
                .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-9i64..=9))))
                .collect()
        })
        .collect();
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        vectors.push(e);
    }
    for v in vectors {
        if annihilates_matrix(x, &m) {
            return m;
        }
        m = qpoly_lcm_monic(&m, &vector_annihilator(x, &v));
    }
    debug_assert!(annihilates_matrix(x, &m));
    m
}

/// Divides `n` by `d` in Q(mu)[t], returning None on a nonzero remainder.
fn tpoly_exact_quotient(n: &TPoly, d: &TPoly) -> Option<TPoly> {
    let (q, r) = n.divrem(d);
    r.is_zero().then_some(q)
}

/// Interpolates the minimal polynomial of X over Q(mu) from rational
/// specializations and proves it exact.  Soundness: a monic t-divisor of
/// the characteristic polynomial has coefficients in Q[mu] with mu-degree
/// at most `bound` (degrees in mu are additive across a monic
/// factorization), specializing such a divisor can only shrink the
/// specialized minimal polynomial, and the candidate is checked to
/// annihilate X at enough points to cover the entry degrees of the
/// polynomial matrix m(X).  Together: candidate annihilates X over Q(mu)
/// so minpoly | candidate, and candidate's degree equals a specialized
/// minimal polynomial's degree, a lower bound for the minpoly degree.
/// Returns None when no stable consensus emerges, and the caller falls
/// back to the elimination.
fn pencil_minpoly(x: &Mat<QPoly>, bound: usize, mu_deg: usize) -> Result<Option<TPoly>> {
    let n = x.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4D50_4F4C);
    let needed = bound + 1;
    let grid_size = needed + 8;
    let grid: Vec<BigRational> = (0..grid_size as i64)
        .map(|i| BigRational::from_integer(BigInt::from(i)))
        .collect();
    let seeds: Vec<(BigRational, u64)> = grid
        .iter()
        .enumerate()
        .map(|(i, mu0)| (mu0.clone(), rng.gen::<u64>() ^ i as u64))
        .collect();
    let sampled: Vec<(BigRational, QPoly)> = par::map_vec(seeds, |(mu0, seed)| {
        let mut local = ChaCha8Rng::seed_from_u64(seed);
        let mp = minpoly_rational(&specialize(x, &mu0), &mut local);
        (mu0, mp)
    });
    let degree = sampled
        .iter()
        .filter_map(|(_, p)| p.degree())
        .max()
        .unwrap_or(0);
    let consensus: Vec<&(BigRational, QPoly)> = sampled
        .iter()
        .filter(|(_, p)| p.degree() == Some(degree))
        .collect();
    if consensus.len() < needed {
        return Ok(None);
    }
    let xs: Vec<BigRational> = consensus[..needed].iter().map(|(m, _)| m.clone()).collect();
    let coeffs: Vec<RatFunc> = (0..=degree)
        .map(|k| {
            let ys: Vec<BigRational> = consensus[..needed].iter().map(|(_, p)| p.coeff(k)).collect();
            RatFunc::from_qpoly(&newton_interpolate(&xs, &ys))
        })
        .collect();
    let candidate = TPoly::new(coeffs);
    if candidate.degree() != Some(degree) || candidate.leading() != Some(&RatFunc::from_int(1)) {
        return Ok(None);
    }
    // Exact annihilation: every entry of candidate(X) is a polynomial in
    // mu of degree at most candidate's coefficient degree plus n * mu_deg,
    // so vanishing at verify_points many rationals is vanishing
    // identically.
    let coeff_mu_deg = candidate
        .coeffs()
        .iter()
        .map(|c| c.num().degree().unwrap_or(0))
        .max()
        .unwrap_or(0);
    if candidate.coeffs().iter().any(|c| !c.is_polynomial()) {
        return Ok(None);
    }
    let verify_points = coeff_mu_deg + n * mu_deg + 1;
    for i in 0..verify_points as i64 {
        let mu0 = BigRational::from_integer(BigInt::from(-1 - i));
        let spec_candidate = QPoly::new(
            candidate
                .coeffs()
                .iter()
                .map(|c| c.eval(&mu0).expect("polynomial coefficient"))
                .collect(),
        );
        if !annihilates_matrix(&specialize(x, &mu0), &spec_candidate) {
            return Ok(None);
        }
    }
    Ok(Some(candidate))
}

/// Assembles the Smith form of a derogatory pencil from its certified
/// minimal polynomial.  f_n is the minimal polynomial m; the remaining
/// nontrivial factors multiply to q = char/m.  When q = p^d for a monic
/// degree-1 prime p with p^2 not dividing m, the divisibility chain
/// forces those factors to be d copies of p: each one divides m, so no
/// factor can hold p twice.  Other shapes return None.
fn derogatory_factors(charpoly: &TPoly, minpoly: &TPoly) -> Option<Vec<TPoly>> {
    let q = tpoly_exact_quotient(charpoly, minpoly)?;
    let n = charpoly.degree()?;
    if q.degree() == Some(0) {
        let mut factors = vec![TPoly::one(); n - 1];
        factors.push(tpoly_monic(charpoly));
        return Some(factors);
    }
    let d = q.degree()?;
    // Candidate p from the sub-leading coefficient of q = (t + c)^d.
    let c = q.coeff(d - 1)
        * RatFunc::from_rational(&BigRational::new(BigInt::one(), BigInt::from(d as i64)));
    let p = TPoly::new(vec![c, RatFunc::from_int(1)]);
    let mut power = TPoly::one();
    for _ in 0..d {
        power = &power * &p;
    }
    if power != tpoly_monic(&q) {
        return None;
    }
    let m_over_p = tpoly_exact_quotient(minpoly, &p)?;
    if tpoly_exact_quotient(&m_over_p, &p).is_some() {
        // p^2 divides the minimal polynomial: the distribution of the
        // lower factors is no longer forced by arithmetic alone.
        return None;
    }
    if d + 1 > n {
        return None;
    }
    let mut factors = vec![TPoly::one(); n - 1 - d];
    factors.extend(std::iter::repeat(p).take(d));
    factors.push(tpoly_monic(minpoly));
    Some(factors)
}

/// Certified shortcut for pencils tI - X: when a Krylov basis of a random
/// rational specialization has full rank, X has a cyclic vector over
/// Q(mu) -- the Krylov determinant is a polynomial in mu, so one nonzero
/// rational point settles it -- and the Smith form is diag(1, ..., 1,
/// char(X)) with no elimination at all.  The characteristic polynomial is
/// sampled at integer mu and interpolated per t-coefficient, then
/// re-verified at an off-grid point, which doubles as the determinant
/// recheck.  Returns None when the shape or the certificate fails, and
/// the caller falls back to the general elimination.
fn pencil_fast_path(m: &Mat<TPoly>) -> Result<Option<SnfResult>> {
    let Some((x, mu_deg)) = pencil_constant_part(m) else {
        return Ok(None);
    };
    let n = x.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(0x534E_46);
    let mut certified = false;
    for attempt in 0..4u32 {
        let mu0 = BigRational::from_integer(BigInt::from(i64::from(attempt) + 2));
        let xr = specialize(&x, &mu0);
        let v0: Vec<BigRational> = (0..n)
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-9i64..=9))))
            .collect();
        let mut krylov = RatMat::from_fn(n, n, |_, _| BigRational::zero());
        let mut v = v0;
        for col in 0..n {
            for row in 0..n {
                krylov[(row, col)] = v[row].clone();
            }
            let mut next = vec![BigRational::zero(); n];
            for (row, slot) in next.iter_mut().enumerate() {
                for (k, vk) in v.iter().enumerate() {
                    if !xr[(row, k)].is_zero() {
                        *slot += &xr[(row, k)] * vk;
                    }
                }
            }
            v = next;
        }
        if rank_rational(&krylov) == n {
            certified = true;
            break;
        }
    }

    // Every coefficient of char(X) is a sum of products of at most n
    // entries, so its mu-degree is at most n * mu_deg and that many
    // samples pin it down.
    let bound = n * mu_deg;
    let xs: Vec<BigRational> = (0..=bound)
        .map(|i| BigRational::from_integer(BigInt::from(i)))
        .collect();
    let samples: Vec<QPoly> = par::map_vec(xs.clone(), |mu0| {
        char_poly_hessenberg(&specialize(&x, &mu0))
    });
    let coeffs: Vec<RatFunc> = (0..=n)
        .map(|k| {
            let ys: Vec<BigRational> = samples.iter().map(|p| p.coeff(k)).collect();
            RatFunc::from_qpoly(&newton_interpolate(&xs, &ys))
        })
        .collect();
    let charpoly = TPoly::new(coeffs);
    debug_assert_eq!(charpoly.degree(), Some(n));

    let off_grid = BigRational::from_integer(BigInt::from(bound as i64 + 1));
    let direct = char_poly_hessenberg(&specialize(&x, &off_grid));
    let substituted = QPoly::new(
        charpoly
            .coeffs()
            .iter()
            .map(|c| c.eval(&off_grid).expect("polynomial coefficients"))
            .collect(),
    );
    if direct != substituted {
        return Err(Error::DegreeBound(
            "pencil characteristic polynomial failed its off-grid verification".into(),
        ));
    }

    let invariant_factors = if certified {
        let mut factors = vec![TPoly::one(); n - 1];
        factors.push(charpoly);
        factors
    } else {
        // No cyclic vector found: compute the certified minimal
        // polynomial and let the divisibility chain force the remaining
        // factors.  Shapes the arithmetic cannot force fall back to the
        // general elimination.
        let Some(minpoly) = pencil_minpoly(&x, bound, mu_deg)? else {
            return Ok(None);
        };
        let Some(factors) = derogatory_factors(&charpoly, &minpoly) else {
            return Ok(None);
        };
        for w in factors.windows(2) {
            debug_assert!(tpoly_divides(&w[0], &w[1]), "forced chain violated");
        }
        factors
    };
    let primitive_factors = invariant_factors.iter().map(tpoly_primitive_bipoly).collect();
    Ok(Some(SnfResult {
        rows: n,
        cols: n,
        rank: n,
        invariant_factors,
        primitive_factors,
        det_recheck: true,
    }))
}

/// Smith normal form.  Invariant factors come out monic in t and satisfy
/// the divisibility chain; a determinant recheck validates the product.
/// Pencils tI - X with a certified cyclic vector short-circuit to
/// diag(1, ..., 1, char(X)); everything else goes through the Euclidean
/// elimination over Q(mu)[t].
pub fn snf(m: &Mat<TPoly>) -> Result<SnfResult> {
    if let Some(fast) = pencil_fast_path(m)? {
        return Ok(fast);
    }
    snf_elimination(m)
}

/// The general elimination, also used directly in tests as an independent
/// oracle for the pencil shortcut.
fn snf_elimination(m: &Mat<TPoly>) -> Result<SnfResult> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut work = m.clone();
    let dim = rows.min(cols);
    let mut diag: Vec<TPoly> = Vec::new();

    for d in 0..dim {
        // Bring a minimal entry to (d, d) and clear its row and column.
        // Every re-selection strictly drops the pivot t-degree, so this
        // terminates.
        let Some((pr, pc)) = pivot_candidate(&work, d) else {
            break;
        };
        work.swap_rows(d, pr);
        work.swap_cols(d, pc);
        loop {
            let pivot = work[(d, d)].clone();
            let mut disturbed = false;
            for i in d + 1..rows {
                if work[(i, d)].is_zero() {
                    continue;
                }
                let (q, r) = work[(i, d)].divrem(&pivot);
                row_sub_scaled(&mut work, i, d, &q, d);
                normalize_row(&mut work, i, d);
                if !r.is_zero() {
                    disturbed = true;
                }
            }
            for j in d + 1..cols {
                if work[(d, j)].is_zero() {
                    continue;
                }
                let (q, r) = work[(d, j)].divrem(&pivot);
                col_sub_scaled(&mut work, j, d, &q, d);
                if !r.is_zero() {
                    disturbed = true;
                }
            }
            if !disturbed {
                break;
            }
            // A remainder of smaller degree is now somewhere in the cross;
            // promote it and repeat.
            let (pr, pc) = pivot_candidate(&work, d).expect("pivot vanished");
            work.swap_rows(d, pr);
            work.swap_cols(d, pc);
        }
        diag.push(tpoly_monic(&work[(d, d)].clone()));
    }

    // Enforce the divisibility chain via diag(a, b) ~ diag(gcd, lcm).
    let rank = diag.len();
    let mut stable = false;
    while !stable {
        stable = true;
        for i in 0..rank {
            for j in i + 1..rank {
                let (a, b) = (diag[i].clone(), diag[j].clone());
                if tpoly_divides(&a, &b) {
                    continue;
                }
                let g = tpoly_gcd_monic(&a, &b)?;
                let l = tpoly_monic(&(&a * &b).exact_div(&g));
                diag[i] = g;
                diag[j] = l;
                stable = false;
            }
        }
    }
    for w in diag.windows(2) {
        debug_assert!(tpoly_divides(&w[0], &w[1]), "SNF chain violated");
    }

    // Independent determinant recheck for square input.
    let det_recheck = if rows == cols {
        let det = det_tpoly(m)?;
        if rank < dim {
            det.is_zero()
        } else {
            let mut prod = TPoly::one();
            for f in &diag {
                prod = &prod * f;
            }
            !det.is_zero() && tpoly_monic(&det) == prod
        }
    } else {
        true
    };

    let primitive_factors = diag.iter().map(tpoly_primitive_bipoly).collect();
    Ok(SnfResult {
        rows,
        cols,
        rank,
        invariant_factors: diag,
        primitive_factors,
        det_recheck,
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    num
}

/// k-th determinant divisor D_k: the monic gcd of all k x k minors.
/// Direct enumeration with an early gcd = 1 cutoff below
/// [`MINOR_ENUMERATION_LIMIT`]; above it, derived from the Smith form.
pub fn determinant_divisor(m: &Mat<TPoly>, k: usize) -> Result<TPoly> {
    let (rows, cols) = (m.rows(), m.cols());
    if k == 0 {
        return Ok(TPoly::one());
    }
    if k > rows.min(cols) {
        return Err(Error::InvalidInput(format!(
            "determinant divisor order {k} exceeds matrix dimensions {rows}x{cols}"
        )));
    }
    let count = binomial(rows, k).saturating_mul(binomial(cols, k));
    if count > MINOR_ENUMERATION_LIMIT {
        let s = snf(m)?;
        if s.rank < k {
            return Ok(TPoly::zero());
        }
        let mut prod = TPoly::one();
        for f in &s.invariant_factors[..k] {
            prod = &prod * f;
        }
        return Ok(prod);
    }

    let row_sets: Vec<Vec<usize>> = (0..rows).combinations(k).collect();
    let col_sets: Vec<Vec<usize>> = (0..cols).combinations(k).collect();
    let mut g: Option<TPoly> = None;
    let pairs: Vec<(usize, usize)> = (0..row_sets.len())
        .cartesian_product(0..col_sets.len())
        .map(|(a, b)| (a, b))
        .collect();
    // Chunked so minor determinants run in parallel while the early exit
    // still fires as soon as the accumulated gcd becomes constant.
    for chunk in pairs.chunks(64) {
        let minors: Vec<TPoly> = par::map_vec(chunk.to_vec(), |(a, b)| {
            let sub = m.select(&row_sets[a], &col_sets[b]);
            det_tpoly(&sub).expect("minor determinant failed")
        });
        for minor in minors {
            if minor.is_zero() {
                continue;
            }
            g = Some(match g {
                None => tpoly_monic(&minor),
                Some(acc) => tpoly_gcd_monic(&acc, &minor)?,
            });
        }
        if g.as_ref().is_some_and(|p| p.degree() == Some(0)) {
            break;
        }
    }
    Ok(g.map_or_else(TPoly::zero, |p| tpoly_monic(&p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn t_plus_mu() -> TPoly {
        bipoly_to_tpoly(&(&BiPoly::t() + &BiPoly::mu()))
    }

    fn edge_matrix() -> Mat<TPoly> {
        // tI - A + mu D for a single edge: [[t+mu, -1], [-1, t+mu]]
        Mat::from_fn(2, 2, |r, c| {
            if r == c {
                t_plus_mu()
            } else {
                TPoly::constant(RatFunc::from_int(-1))
            }
        })
    }

    #[test]
    fn snf_of_edge_matrix_is_one_and_determinant() {
        let s = snf(&edge_matrix()).unwrap();
        assert_eq!(s.rank, 2);
        assert!(s.det_recheck);
        assert_eq!(s.invariant_factors[0], TPoly::one());
        let det = &(&t_plus_mu() * &t_plus_mu()) - &TPoly::one();
        assert_eq!(s.invariant_factors[1], det);
        assert!(s.is_ones_then_single_nontrivial());
    }

    #[test]
    fn snf_fixes_divisibility_on_diagonal_input() {
        // diag(t(t+mu), t) must reorder to (t, t(t+mu)).
        let t: TPoly = TPoly::x();
        let a = &t * &t_plus_mu();
        let m = Mat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) => a.clone(),
            (1, 1) => t.clone(),
            _ => TPoly::zero(),
        });
        let s = snf(&m).unwrap();
        assert_eq!(s.invariant_factors[0], t);
        assert_eq!(s.invariant_factors[1], a);
        assert!(s.det_recheck);
    }

    #[test]
    fn snf_of_singular_matrix_reports_deficient_rank() {
        let one = TPoly::one();
        let m = Mat::from_fn(2, 2, |_, _| one.clone());
        let s = snf(&m).unwrap();
        assert_eq!(s.rank, 1);
        assert!(s.det_recheck);
        assert_eq!(s.invariant_factors[0], TPoly::one());
    }

    #[test]
    fn determinant_divisor_small_cases() {
        let m = edge_matrix();
        // D_1 = 1 because of the -1 entries.
        let d1 = determinant_divisor(&m, 1).unwrap();
        assert_eq!(d1, TPoly::one());
        // D_2 = monic determinant.
        let d2 = determinant_divisor(&m, 2).unwrap();
        let det = &(&t_plus_mu() * &t_plus_mu()) - &TPoly::one();
        assert_eq!(d2, det);
    }

    #[test]
    fn pencil_shortcut_agrees_with_elimination() {
        // The two snf routes share no code: Krylov certificate plus
        // interpolated characteristic polynomial versus Euclidean
        // elimination.  They must produce identical factors on pencils.
        let pencils: Vec<Mat<TPoly>> = vec![
            edge_matrix(),
            // tI - A + mu D for the path on three vertices.
            Mat::from_fn(3, 3, |r, c| {
                if r == c {
                    let d = if r == 1 { 2 } else { 1 };
                    bipoly_to_tpoly(
                        &(&BiPoly::t()
                            + &BiPoly::monomial(
                                BigRational::from_integer(BigInt::from(d)),
                                0,
                                1,
                            )),
                    )
                } else if r + 1 == c || c + 1 == r {
                    TPoly::constant(RatFunc::from_int(-1))
                } else {
                    TPoly::zero()
                }
            }),
        ];
        for m in pencils {
            let fast = pencil_fast_path(&m)
                .unwrap()
                .expect("certificate should fire on these pencils");
            let slow = snf_elimination(&m).unwrap();
            assert!(fast.same_factors(&slow));
            assert_eq!(fast.rank, slow.rank);
            assert!(fast.det_recheck && slow.det_recheck);
        }
    }

    #[test]
    fn pencil_shortcut_handles_derogatory_and_odd_shapes() {
        // tI - X for X = -2 mu I + A of the 4-cycle is derogatory (the
        // adjacency spectrum 2, 0, 0, -2 shifts uniformly), so no cyclic
        // vector exists; the shortcut must take the minimal-polynomial
        // route and agree with the general elimination.
        let c4 = Mat::from_fn(4, 4, |r, c| {
            if r == c {
                bipoly_to_tpoly(
                    &(&BiPoly::t()
                        + &BiPoly::monomial(BigRational::from_integer(BigInt::from(2)), 0, 1)),
                )
            } else if (r as i64 - c as i64).rem_euclid(4) == 1
                || (c as i64 - r as i64).rem_euclid(4) == 1
            {
                TPoly::constant(RatFunc::from_int(-1))
            } else {
                TPoly::zero()
            }
        });
        let fast = pencil_fast_path(&c4).unwrap().expect("derogatory route");
        let slow = snf_elimination(&c4).unwrap();
        assert_eq!(fast.invariant_factors, slow.invariant_factors);
        assert_eq!(fast.rank, 4);
        assert!(!fast.is_ones_then_single_nontrivial());
        // C4's pencil has minimal polynomial of degree 3, so exactly one
        // nontrivial factor sits below the last one.
        assert_eq!(fast.invariant_factors[2].degree(), Some(1));
        // Non-pencil shapes are rejected immediately.
        let t: TPoly = TPoly::x();
        let quad = Mat::from_fn(2, 2, |r, c| if r == c { &t * &t } else { TPoly::zero() });
        assert!(pencil_fast_path(&quad).unwrap().is_none());
    }

    #[test]
    fn determinant_divisor_agrees_with_snf_products() {
        // Random-ish small polynomial matrix; D_k == product of first k
        // invariant factors for every k.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..4 {
            let m = Mat::from_fn(3, 3, |_, _| {
                let mut p = BiPoly::zero();
                for i in 0..2 {
                    for j in 0..2 {
                        let c = rng.gen_range(-2i64..=2);
                        if c != 0 {
                            p = &p
                                + &BiPoly::monomial(
                                    BigRational::from_integer(BigInt::from(c)),
                                    i,
                                    j,
                                );
                        }
                    }
                }
                bipoly_to_tpoly(&p)
            });
            let s = snf(&m).unwrap();
            assert!(s.det_recheck, "snf determinant recheck failed");
            let mut prod = TPoly::one();
            for k in 1..=s.rank {
                prod = &prod * &s.invariant_factors[k - 1];
                let dk = determinant_divisor(&m, k).unwrap();
                assert_eq!(dk, prod, "determinant divisor mismatch at k={k}");
            }
        }
    }
}
