//! Sparse multivariate integer polynomials, used for the symbolic
//! determinant over the coefficients c_1..c_k of a similarity-space basis.
//! Terms live in a BTreeMap keyed by exponent vectors, compared
//! lexicographically, which gives a deterministic leading term for the
//! exact divisions inside fraction-free elimination.

use super::matrix::Mat;
use num::{BigInt, BigRational, Integer, One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, BigInt::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| u32::from(x)).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, expo: Vec<u16>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let expo: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(expo, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut out = MPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    fn leading(&self) -> (&Vec<u16>, &BigInt) {
        self.terms.last_key_value().expect("leading of zero")
    }

    /// Quotient when the division is known to be exact, as inside
    /// fraction-free elimination.  Panics otherwise.
    pub fn exact_div(&self, divisor: &MPoly) -> MPoly {
        assert_eq!(self.nvars, divisor.nvars);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        let (de, dc) = (divisor.leading().0.clone(), divisor.leading().1.clone());
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading();
                (e.clone(), c.clone())
            };
            let expo: Vec<u16> = re
                .iter()
                .zip(&de)
                .map(|(a, b)| a.checked_sub(*b).expect("inexact monomial division"))
                .collect();
            let (q, r) = rc.div_rem(&dc);
            assert!(r.is_zero(), "inexact coefficient division");
            let mut mono = MPoly::zero(self.nvars);
            mono.terms.insert(expo, q);
            rem = rem.sub(&mono.mul(divisor));
            quot = quot.add(&mono);
        }
        quot
    }

    /// Replaces variable `var` by an integer value; the exponent of `var`
    /// becomes 0 everywhere.
    pub fn substitute_int(&self, var: usize, value: i64) -> MPoly {
        let v = BigInt::from(value);
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut expo = e.clone();
            let k = expo[var];
            expo[var] = 0;
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff *= &v;
            }
            out.insert_term(expo, coeff);
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (var, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= &point[var];
                }
            }
            acc += term;
        }
        acc
    }
}

/// Fraction-free determinant over Z[c_1..c_k].  Division-by-previous-pivot
/// keeps every intermediate entry a genuine minor, bounding coefficient
/// and degree growth.
pub fn det_mpoly(mat: &Mat<MPoly>) -> MPoly {
    assert!(mat.is_square());
    let n = mat.rows();
    let nvars = if n == 0 { 0 } else { mat[(0, 0)].nvars() };
    if n == 0 {
        return MPoly::one(nvars);
    }
    let mut m = mat.clone();
    let mut sign = false;
    let mut prev = MPoly::one(nvars);
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return MPoly::zero(nvars);
            };
            m.swap_rows(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[(k, k)].mul(&m[(i, j)]).sub(&m[(i, k)].mul(&m[(k, j)]));
                m[(i, j)] = num.exact_div(&prev);
            }
        }
        for i in k + 1..n {
            m[(i, k)] = MPoly::zero(nvars);
        }
        prev = m[(k, k)].clone();
    }
    let det = m[(n - 1, n - 1)].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// A point with all coordinates in 1..=deg+1 where f does not vanish,
/// found variable by variable.  A nonzero polynomial of degree d in one
/// variable has at most d roots, so scanning d + 1 candidate values per
/// variable always succeeds.  Returns None only for the zero polynomial.
pub fn nonvanishing_point(f: &MPoly) -> Option<Vec<BigInt>> {
    if f.is_zero() {
        return None;
    }
    let mut cur = f.clone();
    let mut point = Vec::with_capacity(f.nvars());
    for var in 0..f.nvars() {
        let dv = i64::from(cur.degree_in(var));
        let mut chosen = None;
        for val in 1..=dv + 1 {
            let next = cur.substitute_int(var, val);
            if !next.is_zero() {
                chosen = Some((val, next));
                break;
            }
        }
        let (val, next) = chosen.expect("nonzero polynomial vanished on a full grid");
        point.push(BigInt::from(val));
        cur = next;
    }
    debug_assert!(!cur.is_zero());
    Some(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_mpoly(nvars: usize, rng: &mut impl Rng) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for _ in 0..rng.gen_range(1..6) {
            let expo: Vec<u16> = (0..nvars).map(|_| rng.gen_range(0..3)).collect();
            let mut mono = MPoly::zero(nvars);
            mono.terms.insert(expo, BigInt::from(rng.gen_range(-4i64..=4)));
            mono.terms.retain(|_, c| !c.is_zero());
            p = p.add(&mono);
        }
        p
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let point: Vec<BigRational> = [2, 3, 5]
            .iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        for _ in 0..20 {
            let a = random_mpoly(3, &mut rng);
            let b = random_mpoly(3, &mut rng);
            assert_eq!(a.add(&b).eval(&point), a.eval(&point) + b.eval(&point));
            assert_eq!(a.mul(&b).eval(&point), a.eval(&point) * b.eval(&point));
            assert_eq!(a.sub(&b).eval(&point), a.eval(&point) - b.eval(&point));
        }
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let a = random_mpoly(2, &mut rng);
            let b = random_mpoly(2, &mut rng);
            if b.is_zero() {
                continue;
            }
            assert_eq!(a.mul(&b).exact_div(&b), a);
        }
    }

    #[test]
    fn symbolic_determinant_matches_laplace_on_3x3() {
        // Matrix of distinct variables x0..x8; compare against the cofactor
        // expansion expanded by hand.
        let m = Mat::from_fn(3, 3, |r, c| MPoly::var(9, 3 * r + c));
        let v = |i| MPoly::var(9, i);
        let det = det_mpoly(&m);
        let expect = v(0)
            .mul(&v(4).mul(&v(8)).sub(&v(5).mul(&v(7))))
            .sub(&v(1).mul(&v(3).mul(&v(8)).sub(&v(5).mul(&v(6)))))
            .add(&v(2).mul(&v(3).mul(&v(7)).sub(&v(4).mul(&v(6)))));
        assert_eq!(det, expect);
    }

    #[test]
    fn symbolic_determinant_consistent_with_numeric_evaluation() {
        use crate::algebra::det_rational;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let m = Mat::from_fn(4, 4, |_, _| random_mpoly(2, &mut rng));
            let det = det_mpoly(&m);
            let point: Vec<BigRational> = [7, 11]
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect();
            let numeric = Mat::from_fn(4, 4, |r, c| m[(r, c)].eval(&point));
            assert_eq!(det.eval(&point), det_rational(&numeric));
        }
    }

    #[test]
    fn zero_pivot_rows_are_swapped() {
        let nv = 1;
        let m = Mat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 1) => MPoly::one(nv),
            (1, 0) => MPoly::var(nv, 0),
            _ => MPoly::zero(nv),
        });
        assert_eq!(det_mpoly(&m), MPoly::var(nv, 0).neg());
    }

    #[test]
    fn nonvanishing_point_lands_off_the_zero_set() {
        // (x - 1)(x - 2)(y - 1) forces the search past several candidates.
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let shift = |p: &MPoly, k: i64| p.sub(&MPoly::constant(2, BigInt::from(k)));
        let f = shift(&x, 1).mul(&shift(&x, 2)).mul(&shift(&y, 1));
        let pt = nonvanishing_point(&f).unwrap();
        let rat: Vec<BigRational> = pt.iter().map(|v| BigRational::from_integer(v.clone())).collect();
        assert!(!f.eval(&rat).is_zero());
        assert!(nonvanishing_point(&MPoly::zero(2)).is_none());
    }
}
