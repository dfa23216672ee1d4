//! Characteristic polynomials and cospectrality.
//!
//! The central object is the bivariate polynomial
//! `psi(G; t, mu) = det(tI - A + mu D)`.  Its specializations recover the
//! usual spectra: mu = 0 gives the adjacency characteristic polynomial,
//! mu = -1 the signless Laplacian one, and
//! `charL(t) = (-1)^n psi(G; -t, 1)` the Laplacian one.  Setting t = 0 and
//! reading mu as the variable gives det(mu D - A), which carries the
//! normalized spectrum when no vertex is isolated.
//!
//! The second bivariate polynomial `det(tI - A - alpha J)` is linear in
//! alpha because J has rank one; equality of two such polynomials, equality
//! at two distinct alpha values, and cospectrality of both the graphs and
//! their complements are equivalent (Johnson and Newman).

use crate::algebra::{
    char_poly_hessenberg, char_poly_rational, det_bipoly, det_rational, mat_mul,
    newton_interpolate, BiPoly, Mat, QPoly, RatMat,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;
use num::{BigInt, BigRational, One, Zero};

fn int_to_rat_mat(m: &Mat<BigInt>) -> RatMat {
    m.map(|v| BigRational::from_integer(v.clone()))
}

/// det(tI - A), computed by fraction-free evaluation and interpolation,
/// which outruns rational Hessenberg reduction on integer matrices.
pub fn char_adjacency(g: &Graph) -> QPoly {
    char_poly_rational(&int_to_rat_mat(&g.adjacency_matrix()))
}

/// det(tI - L) with L = D - A.
pub fn char_laplacian(g: &Graph) -> QPoly {
    char_poly_rational(&int_to_rat_mat(&g.laplacian()))
}

/// det(tI - Q) with Q = D + A.
pub fn char_signless_laplacian(g: &Graph) -> QPoly {
    char_poly_rational(&int_to_rat_mat(&g.signless_laplacian()))
}

/// det(tI - D^{-1} A).  Isolated vertices make D singular, which is an
/// error here rather than a convention.
pub fn char_normalized(g: &Graph) -> Result<QPoly> {
    if g.isolated_vertex_count() > 0 {
        return Err(Error::Precondition(format!(
            "normalized spectrum undefined: {} isolated vertices",
            g.isolated_vertex_count()
        )));
    }
    let degs = g.degrees();
    let dinv = Mat::from_fn(g.n(), g.n(), |r, c| {
        if r == c {
            BigRational::new(BigInt::one(), BigInt::from(degs[r]))
        } else {
            BigRational::zero()
        }
    });
    let da = mat_mul(&dinv, &int_to_rat_mat(&g.adjacency_matrix()));
    Ok(char_poly_hessenberg(&da))
}

/// The matrix tI - A + mu D with polynomial entries.  Diagonal entries are
/// t + deg(v) mu, off-diagonal entries are -1 on edges and 0 elsewhere.
pub fn mu_matrix(g: &Graph) -> Mat<BiPoly> {
    let n = g.n();
    let degs = g.degrees();
    Mat::from_fn(n, n, |r, c| {
        if r == c {
            &BiPoly::t() + &BiPoly::monomial(BigRational::from_integer(BigInt::from(degs[r])), 0, 1)
        } else if g.has_edge(r, c) {
            BiPoly::from_int(-1)
        } else {
            BiPoly::zero()
        }
    })
}

/// psi(G; t, mu) = det(tI - A + mu D).
///
/// Computed as the characteristic polynomial of A - mu D at mu = 0..n and
/// interpolated per t-coefficient: every entry of A - mu D is linear in mu,
/// so each t-coefficient has mu-degree at most n and n+1 samples pin it
/// down.  A direct determinant at an off-grid point re-verifies the result.
pub fn mu_polynomial(g: &Graph) -> Result<BiPoly> {
    let n = g.n();
    if n == 0 {
        return Ok(BiPoly::one());
    }
    let degs = g.degrees();
    let mu_points: Vec<usize> = (0..=n).collect();
    let polys: Vec<QPoly> = par::map_vec(mu_points.clone(), |mu| {
        let m = RatMat::from_fn(n, n, |r, c| {
            if r == c {
                BigRational::from_integer(-BigInt::from(mu * degs[r]))
            } else if g.has_edge(r, c) {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        char_poly_hessenberg(&m)
    });
    let xs: Vec<BigRational> = mu_points
        .into_iter()
        .map(|m| BigRational::from_integer(BigInt::from(m)))
        .collect();
    let rows: Vec<QPoly> = (0..=n)
        .map(|k| {
            let ys: Vec<BigRational> = polys.iter().map(|p| p.coeff(k)).collect();
            newton_interpolate(&xs, &ys)
        })
        .collect();
    let psi = BiPoly::new(rows);
    let t0 = BigRational::from_integer(BigInt::from(n + 2));
    let mu0 = BigRational::from_integer(BigInt::from(n + 1));
    let direct = det_rational(&RatMat::from_fn(n, n, |r, c| {
        if r == c {
            &t0 + &(&mu0 * &BigRational::from_integer(BigInt::from(degs[r])))
        } else if g.has_edge(r, c) {
            -BigRational::one()
        } else {
            BigRational::zero()
        }
    }));
    if psi.eval(&t0, &mu0) != direct {
        return Err(Error::DegreeBound(
            "mu polynomial interpolation failed its off-grid verification".into(),
        ));
    }
    debug_assert_eq!(psi.deg_t(), Some(n), "mu polynomial must have t-degree n");
    Ok(psi)
}

/// Determinant of the principal submatrix of tI - A + mu D on the listed
/// vertices.  Degrees on the diagonal come from the full graph, so this is
/// not the mu polynomial of the induced subgraph.
pub fn mu_principal_det(g: &Graph, keep: &[usize]) -> Result<BiPoly> {
    for &v in keep {
        if v >= g.n() {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range for a graph on {} vertices",
                g.n()
            )));
        }
    }
    let m = mu_matrix(g).select(keep, keep);
    det_bipoly(&m, Some((keep.len(), keep.len())))
}

/// Determinant of tI - A + mu D with one row and one column deleted
/// (indices are vertices; row and column may differ).
pub fn mu_minor_det(g: &Graph, drop_row: usize, drop_col: usize) -> Result<BiPoly> {
    let n = g.n();
    if drop_row >= n || drop_col >= n {
        return Err(Error::InvalidInput(format!(
            "minor indices ({drop_row}, {drop_col}) out of range for n = {n}"
        )));
    }
    let m = mu_matrix(g).minor_matrix(drop_row, drop_col);
    det_bipoly(&m, Some((n, n)))
}

/// det(tI - A - alpha J), returned with alpha in the mu slot.  The rank-one
/// perturbation makes it linear in alpha, which is asserted.
pub fn alpha_polynomial(g: &Graph) -> Result<BiPoly> {
    let n = g.n();
    let m = Mat::from_fn(n, n, |r, c| {
        let adj = if g.has_edge(r, c) {
            BiPoly::from_int(-1)
        } else {
            BiPoly::zero()
        };
        let diag = if r == c { BiPoly::t() } else { BiPoly::zero() };
        &(&diag + &adj) - &BiPoly::mu()
    });
    let p = det_bipoly(&m, Some((n, 1)))?;
    assert!(
        p.deg_mu().unwrap_or(0) <= 1,
        "det(tI - A - alpha J) must be linear in alpha"
    );
    Ok(p)
}

/// Which matrix spectrum to compare.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    Normalized,
    /// Full bivariate mu polynomial.
    MuBivariate,
    /// Adjacency spectra of the graphs and of their complements.
    AdjacencyAndComplement,
    /// Bivariate det(tI - A - alpha J).
    AlphaBivariate,
}

impl SpectrumKind {
    pub fn parse(s: &str) -> Result<SpectrumKind> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a" | "adjacency" => SpectrumKind::Adjacency,
            "l" | "laplacian" => SpectrumKind::Laplacian,
            "q" | "signless" => SpectrumKind::SignlessLaplacian,
            "n" | "normalized" => SpectrumKind::Normalized,
            "mu" => SpectrumKind::MuBivariate,
            "complement-pair" | "generalized" => SpectrumKind::AdjacencyAndComplement,
            "alpha" => SpectrumKind::AlphaBivariate,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown spectrum kind {other:?}"
                )))
            }
        })
    }
}

/// Exact cospectrality test for the chosen matrix.
pub fn cospectral(g1: &Graph, g2: &Graph, kind: SpectrumKind) -> Result<bool> {
    Ok(match kind {
        SpectrumKind::Adjacency => char_adjacency(g1) == char_adjacency(g2),
        SpectrumKind::Laplacian => char_laplacian(g1) == char_laplacian(g2),
        SpectrumKind::SignlessLaplacian => {
            char_signless_laplacian(g1) == char_signless_laplacian(g2)
        }
        SpectrumKind::Normalized => char_normalized(g1)? == char_normalized(g2)?,
        SpectrumKind::MuBivariate => mu_polynomial(g1)? == mu_polynomial(g2)?,
        SpectrumKind::AdjacencyAndComplement => {
            char_adjacency(g1) == char_adjacency(g2)
                && char_adjacency(&g1.complement()) == char_adjacency(&g2.complement())
        }
        SpectrumKind::AlphaBivariate => alpha_polynomial(g1)? == alpha_polynomial(g2)?,
    })
}

/// The three equivalent statements of the Johnson-Newman theorem, audited
/// on a concrete pair.
#[derive(Clone, Debug, serde::Serialize)]
pub struct JohnsonNewmanAudit {
    /// det(tI - A - alpha J) agrees as a bivariate polynomial.
    pub alpha_bivariate_equal: bool,
    /// Agreement at the two specializations alpha = 1 and alpha = 2.
    pub alpha_at_two_points_equal: bool,
    /// Graphs cospectral and complements cospectral.
    pub complement_pair_equal: bool,
    /// All three statements agreed with each other.
    pub consistent: bool,
}

pub fn johnson_newman_audit(g1: &Graph, g2: &Graph) -> Result<JohnsonNewmanAudit> {
    let a1 = alpha_polynomial(g1)?;
    let a2 = alpha_polynomial(g2)?;
    let bivariate = a1 == a2;
    let at_points = (1..=2).all(|v| {
        let x = BigRational::from_integer(BigInt::from(v));
        a1.substitute_mu(&x) == a2.substitute_mu(&x)
    });
    let complements = cospectral(g1, g2, SpectrumKind::AdjacencyAndComplement)?;
    let consistent = bivariate == at_points && at_points == complements;
    Ok(JohnsonNewmanAudit {
        alpha_bivariate_equal: bivariate,
        alpha_at_two_points_equal: at_points,
        complement_pair_equal: complements,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use num::traits::Pow;
    use rand::{Rng, SeedableRng};

    fn random_graph(n: usize, seed: u64, p: f64) -> Graph {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    #[test]
    fn mu_polynomial_of_single_edge_by_hand() {
        // det [[t+mu, -1], [-1, t+mu]] = t^2 + 2 mu t + mu^2 - 1.
        let g = named::complete(2);
        let psi = mu_polynomial(&g).unwrap();
        let mut expect = BiPoly::zero();
        for (c, i, j) in [(1, 2, 0), (2, 1, 1), (1, 0, 2), (-1, 0, 0)] {
            expect = &expect + &BiPoly::monomial(BigRational::from_integer(BigInt::from(c)), i, j);
        }
        assert_eq!(psi, expect);
    }

    #[test]
    fn mu_polynomial_matches_bivariate_determinant_route() {
        for (seed, n) in [(21u64, 5usize), (22, 7), (23, 8)] {
            let g = random_graph(n, seed, 0.5);
            let via_det = det_bipoly(&mu_matrix(&g), Some((n, n))).unwrap();
            assert_eq!(mu_polynomial(&g).unwrap(), via_det, "n={n} seed={seed}");
        }
    }

    #[test]
    fn specializations_recover_standard_spectra() {
        for (seed, n) in [(1u64, 6usize), (2, 7), (3, 8)] {
            let g = random_graph(n, seed, 0.45);
            let psi = mu_polynomial(&g).unwrap();
            let zero = BigRational::zero();
            let minus_one = -BigRational::one();
            let one = BigRational::one();
            assert_eq!(
                psi.substitute_mu(&zero),
                char_adjacency(&g),
                "mu = 0 must give the adjacency characteristic polynomial"
            );
            assert_eq!(
                psi.substitute_mu(&minus_one),
                char_signless_laplacian(&g),
                "mu = -1 must give the signless Laplacian one"
            );
            // charL(t) = (-1)^n psi(-t, 1).
            let at_one = psi.negate_t().substitute_mu(&one);
            let sign = if n % 2 == 0 { at_one.clone() } else { -&at_one };
            assert_eq!(
                sign,
                char_laplacian(&g),
                "Laplacian specialization failed at n={n}"
            );
        }
    }

    #[test]
    fn t_zero_slice_carries_the_normalized_spectrum() {
        // psi(G; 0, mu) = det(mu D - A) = det(D) charN(mu) without isolated
        // vertices.
        let g = named::petersen();
        let psi = mu_polynomial(&g).unwrap();
        let slice = psi.substitute_t(&BigRational::zero());
        let charn = char_normalized(&g).unwrap();
        let detd = BigRational::from_integer(BigInt::from(3).pow(10u32));
        assert_eq!(slice, charn.scale(&detd));
    }

    #[test]
    fn normalized_spectrum_requires_no_isolated_vertices() {
        let g = Graph::with_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            char_normalized(&g),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn alpha_polynomial_matches_direct_char_polys() {
        for (seed, n) in [(5u64, 6usize), (6, 7)] {
            let g = random_graph(n, seed, 0.5);
            let p = alpha_polynomial(&g).unwrap();
            for a in 1..=2i64 {
                let alpha = BigRational::from_integer(BigInt::from(a));
                // char poly of A + alpha J, computed independently.
                let m = Mat::from_fn(n, n, |r, c| {
                    let adj = if g.has_edge(r, c) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    adj + alpha.clone()
                });
                assert_eq!(
                    p.substitute_mu(&alpha),
                    char_poly_rational(&m),
                    "alpha specialization failed at alpha={a}, n={n}"
                );
            }
        }
    }

    #[test]
    fn cospectral_mates_with_unequal_complements_fail_johnson_newman() {
        // K(1,4) and C4 + K1 share the adjacency spectrum {2, 0, 0, 0, -2}
        // but their complements differ, so no alpha equivalence holds.
        let star = named::star(4);
        let c4k1 = {
            let mut g = Graph::empty(5);
            for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
                g.set_edge(u, v, true);
            }
            g
        };
        assert!(cospectral(&star, &c4k1, SpectrumKind::Adjacency).unwrap());
        let audit = johnson_newman_audit(&star, &c4k1).unwrap();
        assert!(audit.consistent, "the three statements must move together");
        assert!(!audit.alpha_bivariate_equal);
        assert!(!audit.complement_pair_equal);
    }

    #[test]
    fn johnson_newman_accepts_relabelled_graphs() {
        let g = random_graph(7, 9, 0.5);
        let h = g.relabel(&[3, 0, 6, 2, 5, 1, 4]);
        let audit = johnson_newman_audit(&g, &h).unwrap();
        assert!(audit.consistent);
        assert!(audit.alpha_bivariate_equal);
        assert!(audit.complement_pair_equal);
    }

    #[test]
    fn spectrum_kind_parses_aliases() {
        assert_eq!(
            SpectrumKind::parse("complement-pair").unwrap(),
            SpectrumKind::AdjacencyAndComplement
        );
        assert_eq!(SpectrumKind::parse("MU").unwrap(), SpectrumKind::MuBivariate);
        assert!(SpectrumKind::parse("x").is_err());
    }
}
