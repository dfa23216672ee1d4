//! Dense bivariate polynomials with rational coefficients, stored as
//! polynomials in the first variable ("t") whose coefficients are
//! polynomials in the second ("mu").  The same type serves det(tI - A + mu D)
//! and det(tI - A - alpha J); only the display names differ.

use super::poly::{Poly, QPoly, ZPoly};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

/// `rows[i]` is the coefficient of t^i, a polynomial in mu.
/// Invariant: no trailing zero rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly {
    rows: Vec<QPoly>,
}

impl BiPoly {
    pub fn new(mut rows: Vec<QPoly>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        BiPoly::new(vec![QPoly::constant(c)])
    }

    pub fn from_int(c: i64) -> Self {
        BiPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The monomial c * t^i * mu^j.
    pub fn monomial(c: BigRational, i: usize, j: usize) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![QPoly::zero(); i + 1];
        rows[i] = QPoly::monomial(c, j);
        BiPoly { rows }
    }

    pub fn t() -> Self {
        BiPoly::monomial(BigRational::one(), 1, 0)
    }

    pub fn mu() -> Self {
        BiPoly::monomial(BigRational::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn deg_mu(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.degree()).max()
    }

    /// Coefficient of t^i as a polynomial in mu.
    pub fn t_coeff(&self, i: usize) -> QPoly {
        self.rows.get(i).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn t_rows(&self) -> &[QPoly] {
        &self.rows
    }

    /// Coefficient of t^i mu^j.
    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        self.rows
            .get(i)
            .map(|r| r.coeff(j))
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: &BigRational, mu: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for row in self.rows.iter().rev() {
            acc = acc * t.clone() + row.eval(mu);
        }
        acc
    }

    /// Substitutes a constant for mu, leaving a polynomial in t.
    pub fn substitute_mu(&self, mu: &BigRational) -> QPoly {
        Poly::new(self.rows.iter().map(|r| r.eval(mu)).collect())
    }

    /// Substitutes a constant for t, leaving a polynomial in mu.
    pub fn substitute_t(&self, t: &BigRational) -> QPoly {
        let mut acc = QPoly::zero();
        let mut power = BigRational::one();
        for row in &self.rows {
            acc = &acc + &row.scale(&power);
            power *= t.clone();
        }
        acc
    }

    /// Multiplies every t-coefficient by a polynomial in mu.
    pub fn mul_mu_poly(&self, q: &QPoly) -> BiPoly {
        if q.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::new(self.rows.iter().map(|r| r * q).collect())
    }

    /// Multiplies by t^k.
    pub fn shift_t_up(&self, k: usize) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![QPoly::zero(); k];
        rows.extend(self.rows.iter().cloned());
        BiPoly { rows }
    }

    /// Maps t -> -t; used for the Laplacian specialization identity.
    pub fn negate_t(&self) -> BiPoly {
        BiPoly::new(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| if i % 2 == 1 { -r } else { r.clone() })
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::new(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    /// Leading exponent pair in graded-lex order with t > mu.
    pub fn leading_term_gradedlex(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => {
                        (i + j, i) > (bi + bj, bi)
                    }
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Rescales to integer coefficients with content 1 and a positive
    /// leading coefficient in graded-lex order (t > mu).  Zero maps to zero.
    pub fn primitive_normalize(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut den = BigInt::one();
        for row in &self.rows {
            for c in row.coeffs() {
                den = den.lcm(c.denom());
            }
        }
        let mut content = BigInt::zero();
        for row in &self.rows {
            for c in row.coeffs() {
                content = content.gcd(&(c.numer() * (&den / c.denom())));
            }
        }
        let (li, lj) = self.leading_term_gradedlex().unwrap();
        if self.coeff(li, lj).is_negative() {
            content = -content;
        }
        let factor = BigRational::new(den, content);
        self.scale(&factor)
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.coeffs().iter().all(|c| c.denom().is_one()))
    }

    /// Monic in t: divides by the leading t-coefficient, which must be a
    /// nonzero constant (true for characteristic-style polynomials).
    /// Returns None when the leading t-coefficient is not constant in mu.
    pub fn monic_in_t(&self) -> Option<BiPoly> {
        let lead = self.rows.last()?;
        if lead.degree() != Some(0) {
            return None;
        }
        let inv = BigRational::one() / lead.coeff(0);
        Some(self.scale(&inv))
    }

    /// Content with respect to t: the primitive integer gcd in Z[mu] of all
    /// t-coefficients (up to rational scaling), positive leading coefficient.
    pub fn content_wrt_t(&self) -> ZPoly {
        let mut g = ZPoly::zero();
        for row in &self.rows {
            g = ZPoly::gcd_primitive(&g, &row.primitive_z());
        }
        g
    }

    /// Divides every t-coefficient exactly by a polynomial in mu.
    pub fn exact_div_mu(&self, d: &QPoly) -> BiPoly {
        BiPoly::new(self.rows.iter().map(|r| r.exact_div(d)).collect())
    }

    /// Exact division self / d in Q[mu][t]; panics if not divisible
    /// (internal use on products and verified gcds only).
    pub fn exact_div(&self, d: &BiPoly) -> BiPoly {
        assert!(!d.is_zero(), "bivariate division by zero");
        let dd = d.deg_t().unwrap();
        let lead = d.rows.last().unwrap().clone();
        let mut r = self.clone();
        let mut q_rows =
            vec![QPoly::zero(); self.rows.len().saturating_sub(dd)];
        while let Some(rd) = r.deg_t() {
            if rd < dd {
                panic!("bivariate exact division left a remainder");
            }
            let (c, rem) = r.rows.last().unwrap().divrem(&lead);
            assert!(rem.is_zero(), "bivariate exact division left a remainder");
            q_rows[rd - dd] = c.clone();
            let mut sub_rows = vec![QPoly::zero(); rd - dd];
            for row in &d.rows {
                sub_rows.push(row * &c);
            }
            r = &r - &BiPoly::new(sub_rows);
        }
        BiPoly::new(q_rows)
    }

    /// Renders with terms ordered by decreasing t-degree, then decreasing
    /// degree in the second variable.
    pub fn format(&self, tvar: &str, mvar: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let one = BigRational::one();
        let minus_one = -BigRational::one();
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate().rev() {
            for (j, c) in row.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mut pows = Vec::new();
                if i > 0 {
                    pows.push(if i == 1 {
                        tvar.to_string()
                    } else {
                        format!("{tvar}^{i}")
                    });
                }
                if j > 0 {
                    pows.push(if j == 1 {
                        mvar.to_string()
                    } else {
                        format!("{mvar}^{j}")
                    });
                }
                let body = if pows.is_empty() {
                    format!("{c}")
                } else if *c == one {
                    pows.join("*")
                } else if *c == minus_one {
                    format!("-{}", pows.join("*"))
                } else {
                    format!("{c}*{}", pows.join("*"))
                };
                if out.is_empty() {
                    out.push_str(&body);
                } else if let Some(stripped) = body.strip_prefix('-') {
                    let _ = write!(out, " - {stripped}");
                } else {
                    let _ = write!(out, " + {body}");
                }
            }
        }
        out
    }

    /// Coefficients as nested arrays of exact rational strings:
    /// `out[i][j]` is the coefficient of t^i * mu^j.
    pub fn coeff_strings(&self) -> Vec<Vec<String>> {
        let width = self.deg_mu().map_or(0, |d| d + 1);
        self.rows
            .iter()
            .map(|row| (0..width).map(|j| row.coeff(j).to_string()).collect())
            .collect()
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, other: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(other.rows.len());
        let mut rows = Vec::with_capacity(n);
        for k in 0..n {
            rows.push(&self.t_coeff(k) + &other.t_coeff(k));
        }
        BiPoly::new(rows)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, other: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(other.rows.len());
        let mut rows = Vec::with_capacity(n);
        for k in 0..n {
            rows.push(&self.t_coeff(k) - &other.t_coeff(k));
        }
        BiPoly::new(rows)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.rows.iter().map(|r| -r).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![QPoly::zero(); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly::new(rows)
    }
}
