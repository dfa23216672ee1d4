//! Strongly regular and 1-walk-regular graphs, exact clique enumeration, and
//! clique-subgraph deletion sweeps.
//!
//! The sweeps realize a rigidity phenomenon: in a 1-walk-regular graph,
//! deleting the edges of a fixed small graph inside a clique produces the
//! same μ-polynomial no matter which clique or which embedding is chosen,
//! even when the resulting graphs are non-isomorphic.  For strongly regular
//! hosts the complements of the deleted graphs also share one μ-polynomial.
//! Two exact linear-algebra utilities used by the underlying rank-one
//! perturbation argument — the Sherman–Morrison update and the determinant
//! commutation identity det(I−CD) = det(I−DC) — are exposed as verified
//! checks.

use itertools::Itertools;
use num::{BigRational, One, Zero};
use serde::Serialize;

use crate::algebra::bipoly::BiPoly;
use crate::algebra::det::{det_rational, inverse_rational};
use crate::algebra::matrix::{mat_mul, IntMat, Mat, RatMat};
use crate::canon::canonical_cert;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;
use crate::spectra::mu_polynomial;

/// Parameters (n, d; a, c) of a strongly regular graph: d-regular on n
/// vertices, adjacent pairs share exactly `a` common neighbors, distinct
/// non-adjacent pairs exactly `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    pub a: usize,
    pub c: usize,
}

impl SrgParams {
    /// Builds the parameter tuple, checking the standard feasibility
    /// identity d(d−a−1) = (n−d−1)c obtained by double-counting edges
    /// between the neighborhood of a vertex and its complement.
    pub fn new(n: usize, d: usize, a: usize, c: usize) -> Result<Self> {
        if d * (d.saturating_sub(a + 1)) != (n.saturating_sub(d + 1)) * c
            || (a + 1 > d && d > 0)
        {
            return Err(Error::Precondition(format!(
                "infeasible strongly-regular parameters ({n}, {d}; {a}, {c})"
            )));
        }
        Ok(SrgParams { n, d, a, c })
    }
}

/// Decides strong regularity by checking A² = dI + aA + c(J−I−A) entrywise
/// in exact integers.  Returns `None` for irregular graphs and for the
/// degenerate cases d = 0 and d = n−1 (no adjacent, resp. no non-adjacent,
/// pair exists to define both parameters).
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let degs = g.degrees();
    let d = degs[0];
    if degs.iter().any(|&x| x != d) || d == 0 || d == n - 1 {
        return None;
    }
    let a_mat = g.adjacency_matrix();
    let sq = mat_mul(&a_mat, &a_mat);
    let mut a_param: Option<usize> = None;
    let mut c_param: Option<usize> = None;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let common: usize = match usize::try_from(&sq[(u, v)]) {
                Ok(x) => x,
                Err(_) => return None,
            };
            let slot = if g.has_edge(u, v) {
                &mut a_param
            } else {
                &mut c_param
            };
            match slot {
                None => *slot = Some(common),
                Some(x) if *x == common => {}
                Some(_) => return None,
            }
        }
    }
    let (a, c) = (a_param?, c_param?);
    let params = SrgParams::new(n, d, a, c)
        .expect("identity forced by double counting on a verified graph");
    Some(params)
}

/// True iff every power A^k for k < n has constant diagonal and is constant
/// on edges.  Any polynomial in A has degree < n, so these power checks
/// capture the full definition (f(A) ∘ I scalar and f(A) ∘ A a multiple of
/// A for all polynomials f).
pub fn is_one_walk_regular(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let a = g.adjacency_matrix();
    let edges = g.edges();
    let mut power = IntMat::identity(n);
    for _ in 1..n {
        power = mat_mul(&power, &a);
        let diag = power[(0, 0)].clone();
        if (1..n).any(|i| power[(i, i)] != diag) {
            return false;
        }
        if let Some(&(u0, v0)) = edges.first() {
            let on_edge = power[(u0, v0)].clone();
            if edges.iter().any(|&(u, v)| power[(u, v)] != on_edge) {
                return false;
            }
        }
    }
    true
}

/// All cliques of exactly `s` vertices, as sorted vertex lists in
/// lexicographic order.  Backtracking extension: each candidate must be
/// adjacent to every vertex already chosen, so the search tree is pruned to
/// cliques only.
pub fn enumerate_cliques(g: &Graph, s: usize) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, s: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        let needed = s - cur.len();
        for v in start..g.n() {
            if g.n() - v < needed {
                break;
            }
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                extend(g, s, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if s == 0 {
        return out;
    }
    extend(g, s, 0, &mut Vec::new(), &mut out);
    out
}

/// Removes from `g` the image of every edge of `h` under `embedding`, where
/// `embedding[i]` is the host vertex carrying vertex `i` of `h`.  The image
/// must be exactly the given clique, so every edge to remove is present.
pub fn delete_h_in_clique(
    g: &Graph,
    h: &Graph,
    clique: &[usize],
    embedding: &[usize],
) -> Result<Graph> {
    if h.n() != clique.len() || embedding.len() != clique.len() {
        return Err(Error::Precondition(format!(
            "subgraph on {} vertices does not fit a clique of size {} (embedding length {})",
            h.n(),
            clique.len(),
            embedding.len()
        )));
    }
    for (i, &u) in clique.iter().enumerate() {
        if u >= g.n() {
            return Err(Error::Precondition(format!("vertex {u} out of range")));
        }
        for &v in &clique[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(Error::Precondition(format!(
                    "vertices {u} and {v} are not adjacent; not a clique"
                )));
            }
        }
    }
    let mut sorted_image: Vec<usize> = embedding.to_vec();
    sorted_image.sort_unstable();
    let mut sorted_clique: Vec<usize> = clique.to_vec();
    sorted_clique.sort_unstable();
    if sorted_image != sorted_clique {
        return Err(Error::Precondition(
            "embedding is not a bijection onto the clique".into(),
        ));
    }
    let mut out = g.clone();
    for (u, v) in h.edges() {
        out.set_edge(embedding[u], embedding[v], false);
    }
    Ok(out)
}

/// Outcome of a clique-deletion sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    /// Number of (clique, embedding) placements checked, embeddings
    /// counted up to automorphisms of the deleted subgraph.
    pub checked: usize,
    /// Number of distinct μ-polynomials among the deleted graphs.
    pub psi_distinct: usize,
    /// Number of isomorphism classes among the deleted graphs.
    pub iso_classes: usize,
    /// Distinct complement μ-polynomials; populated only when the host is
    /// strongly regular, where the complement claim holds.
    pub complement_psi_distinct: Option<usize>,
    /// The common μ-polynomial (formatted) when `psi_distinct` == 1.
    pub common_psi: Option<String>,
}

/// All automorphisms of a small graph, by filtering every permutation.
fn automorphisms(h: &Graph) -> Vec<Vec<usize>> {
    let n = h.n();
    (0..n)
        .permutations(n)
        .filter(|p| {
            (0..n).all(|u| (u + 1..n).all(|v| h.has_edge(u, v) == h.has_edge(p[u], p[v])))
        })
        .collect()
}

/// Deletes `h` inside every clique of size `s` of the 1-walk-regular graph
/// `g`, over every embedding up to automorphisms of `h`, and reports how
/// many distinct μ-polynomials and isomorphism classes appear.  When `g` is
/// strongly regular the complements' μ-polynomials are tallied too.
pub fn sweep_mu_equal(g: &Graph, h: &Graph, s: usize) -> Result<SweepReport> {
    if h.n() != s {
        return Err(Error::Precondition(format!(
            "subgraph has {} vertices but clique size is {s}",
            h.n()
        )));
    }
    if s > 8 {
        return Err(Error::Precondition(format!(
            "clique size {s} exceeds the supported embedding enumeration bound 8"
        )));
    }
    if !is_one_walk_regular(g) {
        return Err(Error::Precondition(
            "host graph is not 1-walk regular".into(),
        ));
    }
    let srg = srg_params(g);
    let auts = automorphisms(h);
    // An embedding and its composition with an automorphism of h delete the
    // same edge set, so keep only the lexicographically least representative
    // of each orbit.
    let perms: Vec<Vec<usize>> = (0..s)
        .permutations(s)
        .filter(|p| {
            auts.iter().all(|a| {
                let composed: Vec<usize> = (0..s).map(|i| p[a[i]]).collect();
                *p <= composed
            })
        })
        .collect();
    let mut tasks: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for clique in enumerate_cliques(g, s) {
        for p in &perms {
            let embedding: Vec<usize> = (0..s).map(|i| clique[p[i]]).collect();
            tasks.push((clique.clone(), embedding));
        }
    }
    // Canonical certificates first: isomorphic deletions share ψ, so one
    // μ-polynomial per isomorphism class suffices for the distinctness
    // counts, and the certificate is far cheaper than the polynomial.
    let certed: Vec<Result<(String, Graph)>> = par::map_vec(tasks, |(clique, embedding)| {
        let deleted = delete_h_in_clique(g, h, &clique, &embedding)?;
        let cert = canonical_cert(&deleted)?;
        Ok((cert, deleted))
    });
    let mut reps: std::collections::BTreeMap<String, Graph> = std::collections::BTreeMap::new();
    let mut checked = 0usize;
    for r in certed {
        let (cert, deleted) = r?;
        checked += 1;
        reps.entry(cert).or_insert(deleted);
    }
    let class_count = reps.len();
    let rep_graphs: Vec<Graph> = reps.into_values().collect();
    let results: Vec<Result<(BiPoly, Option<BiPoly>)>> = par::map_vec(rep_graphs, |deleted| {
        let psi = mu_polynomial(&deleted)?;
        let compl_psi = if srg.is_some() {
            Some(mu_polynomial(&deleted.complement())?)
        } else {
            None
        };
        Ok((psi, compl_psi))
    });
    let mut psis: Vec<BiPoly> = Vec::new();
    let mut compl_psis: Vec<BiPoly> = Vec::new();
    for r in results {
        let (psi, compl_psi) = r?;
        if !psis.contains(&psi) {
            psis.push(psi);
        }
        if let Some(cp) = compl_psi {
            if !compl_psis.contains(&cp) {
                compl_psis.push(cp);
            }
        }
    }
    let common_psi = if psis.len() == 1 {
        Some(psis[0].format("t", "u"))
    } else {
        None
    };
    Ok(SweepReport {
        checked,
        psi_distinct: psis.len(),
        iso_classes: class_count,
        complement_psi_distinct: srg.map(|_| compl_psis.len()),
        common_psi,
    })
}

/// Result of a rank-one update: either the verified inverse of B + uvᵀ or a
/// certificate that the update is singular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankOneUpdate {
    Inverse(RatMat),
    Singular,
}

/// Sherman–Morrison: B + uvᵀ is invertible iff 1 + vᵀB⁻¹u ≠ 0, in which
/// case the inverse is B⁻¹ − B⁻¹uvᵀB⁻¹ / (1 + vᵀB⁻¹u).  The returned
/// inverse is re-verified by exact multiplication; in the singular case the
/// vanishing determinant is re-verified directly.
pub fn sherman_morrison_check(
    b: &RatMat,
    u: &[BigRational],
    v: &[BigRational],
) -> Result<RankOneUpdate> {
    let n = b.rows();
    if !b.is_square() || u.len() != n || v.len() != n {
        return Err(Error::Precondition(format!(
            "shape mismatch: B is {}x{}, |u| = {}, |v| = {}",
            b.rows(),
            b.cols(),
            u.len(),
            v.len()
        )));
    }
    let b_inv = inverse_rational(b)
        .ok_or_else(|| Error::Precondition("B is singular".into()))?;
    let b_inv_u: Vec<BigRational> = (0..n)
        .map(|i| (0..n).map(|j| &b_inv[(i, j)] * &u[j]).sum())
        .collect();
    let v_b_inv: Vec<BigRational> = (0..n)
        .map(|j| (0..n).map(|i| &v[i] * &b_inv[(i, j)]).sum())
        .collect();
    let denom: BigRational =
        BigRational::one() + (0..n).map(|i| &v[i] * &b_inv_u[i]).sum::<BigRational>();
    let updated = Mat::from_fn(n, n, |i, j| &b[(i, j)] + &u[i] * &v[j]);
    if denom.is_zero() {
        assert!(
            det_rational(&updated).is_zero(),
            "vanishing 1 + v^T B^-1 u must force a singular update"
        );
        return Ok(RankOneUpdate::Singular);
    }
    let inverse = Mat::from_fn(n, n, |i, j| {
        &b_inv[(i, j)] - &(&b_inv_u[i] * &v_b_inv[j]) / &denom
    });
    assert_eq!(
        mat_mul(&updated, &inverse),
        RatMat::identity(n),
        "computed update inverse must verify exactly"
    );
    Ok(RankOneUpdate::Inverse(inverse))
}

/// Checks det(I_m − CD) = det(I_n − DC) for an m×n matrix C and an n×m
/// matrix D by evaluating both sides independently.
pub fn det_commutation_check(c: &RatMat, d: &RatMat) -> Result<bool> {
    if c.cols() != d.rows() || d.cols() != c.rows() {
        return Err(Error::Precondition(format!(
            "shapes {}x{} and {}x{} are not conformable",
            c.rows(),
            c.cols(),
            d.rows(),
            d.cols()
        )));
    }
    let m = c.rows();
    let n = c.cols();
    let cd = mat_mul(c, d);
    let dc = mat_mul(d, c);
    let lhs = det_rational(&Mat::from_fn(m, m, |i, j| {
        let delta = if i == j {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        delta - &cd[(i, j)]
    }));
    let rhs = det_rational(&Mat::from_fn(n, n, |i, j| {
        let delta = if i == j {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        delta - &dc[(i, j)]
    }));
    Ok(lhs == rhs)
}
