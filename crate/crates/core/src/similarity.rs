//! The degree-similarity decision.
//!
//! G1 and G2 are degree-similar when one invertible M satisfies
//! `A1 M = M A2` and `D1 M = M D2`.  The second identity forces M to be
//! block diagonal along the shared degree partition, so the candidate
//! matrices form a linear space: the blockwise solutions of `A1 M = M A2`.
//! The decision then asks whether that space contains an invertible
//! element.
//!
//! With basis B_1..B_k the function c -> det(sum c_b B_b) is a polynomial;
//! it vanishes identically exactly when no invertible element exists.  For
//! small k the polynomial is expanded symbolically per block, giving a
//! certified answer either way, with an explicit integer witness point when
//! it is nonzero.  For large k the decision samples random coefficient
//! vectors; any nonsingular sample is a verified YES, and consistent
//! failure is reported as probabilistic with a Schwartz-Zippel error bound.

use crate::algebra::{
    det_mpoly, det_rational, mat_mul, nonvanishing_point, nullspace_rational, MPoly, Mat, RatMat,
};
use crate::graph::{DegreePartition, Graph};
use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use serde::Serialize;

/// Space of block-diagonal intertwiners, in blocked coordinates.
pub struct SimilaritySpace {
    pub partition1: DegreePartition,
    pub partition2: DegreePartition,
    /// Basis elements as full matrices in original labels.
    pub basis: Vec<RatMat>,
}

impl SimilaritySpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Linear combination with the given coefficients, original labels.
    pub fn combine(&self, coeffs: &[BigRational]) -> RatMat {
        assert_eq!(coeffs.len(), self.basis.len());
        let n = self.basis[0].rows();
        Mat::from_fn(n, n, |r, c| {
            let mut acc = BigRational::zero();
            for (b, coeff) in self.basis.iter().zip(coeffs) {
                acc += coeff * &b[(r, c)];
            }
            acc
        })
    }
}

/// Solves the blockwise intertwining equations.  None when the degree
/// partitions do not match, which already refutes degree similarity.
pub fn similarity_space(g1: &Graph, g2: &Graph) -> Option<SimilaritySpace> {
    let p1 = DegreePartition::of(g1);
    let p2 = DegreePartition::of(g2);
    if g1.n() != g2.n() || !p1.matches(&p2) {
        return None;
    }
    let n = g1.n();
    let perm1 = p1.permutation();
    let perm2 = p2.permutation();
    let sizes = p1.cell_sizes();
    let t = sizes.len();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0usize, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    // Unknowns: entries of the diagonal blocks M_1..M_t, flattened.
    let block_base: Vec<usize> = sizes
        .iter()
        .scan(0usize, |acc, &s| {
            let o = *acc;
            *acc += s * s;
            Some(o)
        })
        .collect();
    let unknowns = block_base.last().copied().unwrap_or(0)
        + sizes.last().map_or(0, |s| s * s);

    let a1 = |p: usize, q: usize| g1.has_edge(perm1[p], perm1[q]);
    let a2 = |p: usize, q: usize| g2.has_edge(perm2[p], perm2[q]);

    // One equation per ordered part pair (i, j) and position (r, c):
    // sum_s A1[i r, j s] M_j[s, c] - sum_s M_i[r, s] A2[i s, j c] = 0.
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..t {
        for j in 0..t {
            for r in 0..sizes[i] {
                for c in 0..sizes[j] {
                    let mut row = vec![BigRational::zero(); unknowns];
                    for s in 0..sizes[j] {
                        if a1(offsets[i] + r, offsets[j] + s) {
                            row[block_base[j] + s * sizes[j] + c] += BigRational::one();
                        }
                    }
                    for s in 0..sizes[i] {
                        if a2(offsets[i] + s, offsets[j] + c) {
                            row[block_base[i] + r * sizes[i] + s] -= BigRational::one();
                        }
                    }
                    if row.iter().any(|v| !v.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Mat::from_fn(1, unknowns, |_, _| BigRational::zero())
    } else {
        Mat::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone())
    };
    let null = nullspace_rational(&system);

    // Inverse position maps: original vertex -> blocked position.
    let mut pos1 = vec![0usize; n];
    let mut pos2 = vec![0usize; n];
    for (p, &v) in perm1.iter().enumerate() {
        pos1[v] = p;
    }
    for (p, &v) in perm2.iter().enumerate() {
        pos2[v] = p;
    }
    let part_of_pos: Vec<usize> = (0..t)
        .flat_map(|i| std::iter::repeat(i).take(sizes[i]))
        .collect();
    let basis = null
        .iter()
        .map(|vecn| {
            // Scaling a basis vector by a positive integer keeps the span;
            // clearing denominators makes the symbolic path exact over Z.
            let mut lcm = BigInt::one();
            for v in vecn {
                lcm = num::integer::lcm(lcm, v.denom().clone());
            }
            let lcm = BigRational::from_integer(lcm);
            Mat::from_fn(n, n, |orig1, orig2| {
                let (p, q) = (pos1[orig1], pos2[orig2]);
                let (i, j) = (part_of_pos[p], part_of_pos[q]);
                if i != j {
                    return BigRational::zero();
                }
                let (r, c) = (p - offsets[i], q - offsets[i]);
                &vecn[block_base[i] + r * sizes[i] + c] * &lcm
            })
        })
        .collect();
    Some(SimilaritySpace {
        partition1: p1,
        partition2: p2,
        basis,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum DsVerdict {
    Yes,
    NoCertified,
    NoProbabilistic,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum DsMethod {
    PartitionMismatch,
    TrivialSpace,
    SymbolicDeterminant,
    RandomizedSearch,
}

#[derive(Clone, Debug, Serialize)]
pub struct DsWitness {
    /// Rational entries of M in original labels, row major.
    pub matrix: Vec<Vec<String>>,
    /// All three identities checked on this exact matrix.
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DsDecision {
    pub verdict: DsVerdict,
    pub method: DsMethod,
    pub reason: String,
    pub space_dim: Option<usize>,
    pub seed: u64,
    /// Only present for probabilistic refusals.
    pub error_bound: Option<String>,
    pub witness: Option<DsWitness>,
}

#[derive(Clone, Copy, Debug)]
pub struct DsOptions {
    pub seed: u64,
    /// Randomized rounds before giving a probabilistic refusal.
    pub rounds: usize,
    /// Largest space dimension handled by the symbolic determinant.
    pub symbolic_dim_limit: usize,
    /// Largest vertex count handled by the symbolic determinant.
    pub symbolic_size_limit: usize,
}

impl Default for DsOptions {
    fn default() -> Self {
        DsOptions {
            seed: 0xD5,
            rounds: 40,
            symbolic_dim_limit: 6,
            symbolic_size_limit: 20,
        }
    }
}

/// Checks A1 M = M A2, D1 M = M D2, and det M != 0 exactly.
pub fn verify_witness(g1: &Graph, g2: &Graph, m: &RatMat) -> bool {
    let to_rat = |mat: &crate::algebra::IntMat| mat.map(|v| BigRational::from_integer(v.clone()));
    let a1 = to_rat(&g1.adjacency_matrix());
    let a2 = to_rat(&g2.adjacency_matrix());
    let d1 = to_rat(&g1.degree_matrix());
    let d2 = to_rat(&g2.degree_matrix());
    mat_mul(&a1, m) == mat_mul(m, &a2)
        && mat_mul(&d1, m) == mat_mul(m, &d2)
        && !det_rational(m).is_zero()
}

/// A1c M = M A2c for the complement adjacencies; holds automatically for a
/// witness with constant row and column sums.
pub fn complement_transfer_check(g1: &Graph, g2: &Graph, m: &RatMat) -> bool {
    let to_rat = |mat: &crate::algebra::IntMat| mat.map(|v| BigRational::from_integer(v.clone()));
    let c1 = to_rat(&g1.complement().adjacency_matrix());
    let c2 = to_rat(&g2.complement().adjacency_matrix());
    mat_mul(&c1, m) == mat_mul(m, &c2)
}

/// Rescales an invertible intertwiner of connected graphs so all row and
/// column sums are 1.  M 1 lies in ker L2-transfer, hence is a multiple of
/// the all-ones vector; invertibility makes the multiplier nonzero.
pub fn normalize_row_sums(g1: &Graph, g2: &Graph, m: &RatMat) -> Option<RatMat> {
    if !g1.is_connected() || !g2.is_connected() {
        return None;
    }
    let n = m.rows();
    if n == 0 {
        return Some(m.clone());
    }
    let first_row_sum: BigRational = (0..n).map(|c| m[(0, c)].clone()).sum();
    if first_row_sum.is_zero() {
        return None;
    }
    let scaled = m.map(|v| v / &first_row_sum);
    for r in 0..n {
        let row: BigRational = (0..n).map(|c| scaled[(r, c)].clone()).sum();
        if row != BigRational::one() {
            return None;
        }
    }
    for c in 0..n {
        let col: BigRational = (0..n).map(|r| scaled[(r, c)].clone()).sum();
        if col != BigRational::one() {
            return None;
        }
    }
    Some(scaled)
}

/// Equal traces of every word in A and D up to the given length; a
/// similarity invariant, so any mismatch refutes degree similarity.
pub fn word_trace_test(g1: &Graph, g2: &Graph, max_len: usize) -> bool {
    fn traces(g: &Graph, max_len: usize) -> Vec<BigInt> {
        let a = g.adjacency_matrix();
        let d = g.degree_matrix();
        let n = g.n();
        let mut out = Vec::new();
        // Depth-first over words; product carried along the path.
        let mut stack: Vec<(usize, Mat<BigInt>)> = vec![(0, Mat::from_fn(n, n, |r, c| {
            if r == c {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))];
        while let Some((len, prod)) = stack.pop() {
            if len > 0 {
                let mut tr = BigInt::zero();
                for i in 0..n {
                    tr += &prod[(i, i)];
                }
                out.push(tr);
            }
            if len < max_len {
                stack.push((len + 1, mat_mul(&prod, &d)));
                stack.push((len + 1, mat_mul(&prod, &a)));
            }
        }
        out
    }
    traces(g1, max_len) == traces(g2, max_len)
}

fn witness_from(m: &RatMat, verified: bool) -> DsWitness {
    DsWitness {
        matrix: (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
            .collect(),
        verified,
    }
}

pub fn degree_similar(g1: &Graph, g2: &Graph, opts: &DsOptions) -> DsDecision {
    if g1.n() == 0 && g2.n() == 0 {
        return DsDecision {
            verdict: DsVerdict::Yes,
            method: DsMethod::SymbolicDeterminant,
            reason: "empty graphs are trivially degree-similar".into(),
            space_dim: Some(0),
            seed: opts.seed,
            error_bound: None,
            witness: Some(DsWitness {
                matrix: Vec::new(),
                verified: true,
            }),
        };
    }
    let Some(space) = similarity_space(g1, g2) else {
        return DsDecision {
            verdict: DsVerdict::NoCertified,
            method: DsMethod::PartitionMismatch,
            reason: "degree partitions differ, but conjugation preserves the degree multiset"
                .into(),
            space_dim: None,
            seed: opts.seed,
            error_bound: None,
            witness: None,
        };
    };
    let k = space.dim();
    if k == 0 {
        return DsDecision {
            verdict: DsVerdict::NoCertified,
            method: DsMethod::TrivialSpace,
            reason: "no nonzero matrix intertwines the adjacency matrices blockwise".into(),
            space_dim: Some(0),
            seed: opts.seed,
            error_bound: None,
            witness: None,
        };
    }

    if k <= opts.symbolic_dim_limit && g1.n() <= opts.symbolic_size_limit {
        // det(sum c_b B_b) factors over the diagonal blocks; expand each
        // block determinant symbolically in c_1..c_k.
        let n = g1.n();
        let sym = Mat::from_fn(n, n, |r, c| {
            let mut acc = MPoly::zero(k);
            for (b, basis) in space.basis.iter().enumerate() {
                let v = &basis[(r, c)];
                if !v.is_zero() {
                    debug_assert!(v.denom().is_one(), "basis must be integer-normalized");
                    acc = acc.add(&MPoly::var(k, b).scale(v.numer()));
                }
            }
            acc
        });
        let det = det_mpoly(&sym);
        match nonvanishing_point(&det) {
            None => DsDecision {
                verdict: DsVerdict::NoCertified,
                method: DsMethod::SymbolicDeterminant,
                reason: format!(
                    "det over the {k}-dimensional similarity space is identically zero"
                ),
                space_dim: Some(k),
                seed: opts.seed,
                error_bound: None,
                witness: None,
            },
            Some(point) => {
                let coeffs: Vec<BigRational> = point
                    .iter()
                    .map(|v| BigRational::from_integer(v.clone()))
                    .collect();
                let m = space.combine(&coeffs);
                let verified = verify_witness(g1, g2, &m);
                assert!(verified, "symbolic witness failed exact verification");
                DsDecision {
                    verdict: DsVerdict::Yes,
                    method: DsMethod::SymbolicDeterminant,
                    reason: "nonsingular element found at an integer point of the space".into(),
                    space_dim: Some(k),
                    seed: opts.seed,
                    error_bound: None,
                    witness: Some(witness_from(&m, verified)),
                }
            }
        }
    } else {
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.rounds {
            let coeffs: Vec<BigRational> = (0..k)
                .map(|_| {
                    BigRational::from_integer(BigInt::from(rng.gen_range(1..=1u64 << 60)))
                })
                .collect();
            let m = space.combine(&coeffs);
            if !det_rational(&m).is_zero() {
                let verified = verify_witness(g1, g2, &m);
                assert!(verified, "randomized witness failed exact verification");
                return DsDecision {
                    verdict: DsVerdict::Yes,
                    method: DsMethod::RandomizedSearch,
                    reason: "nonsingular element found by random sampling".into(),
                    space_dim: Some(k),
                    seed: opts.seed,
                    error_bound: None,
                    witness: Some(witness_from(&m, verified)),
                };
            }
        }
        DsDecision {
            verdict: DsVerdict::NoProbabilistic,
            method: DsMethod::RandomizedSearch,
            reason: format!(
                "all {} random combinations were singular; a nonsingular element would be \
                 missed with probability at most ({}/2^60)^{}",
                opts.rounds,
                g1.n(),
                opts.rounds
            ),
            space_dim: Some(k),
            seed: opts.seed,
            error_bound: Some(format!("({}/2^60)^{}", g1.n(), opts.rounds)),
            witness: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use rand::seq::SliceRandom;

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
    fn relabelled_graphs_are_degree_similar_with_verified_witness() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for n in [5usize, 7, 8] {
            let g = random_graph(n, 100 + n as u64, 0.5);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            let d = degree_similar(&g, &h, &DsOptions::default());
            assert_eq!(d.verdict, DsVerdict::Yes, "relabelling must be similar");
            let w = d.witness.expect("yes verdicts carry witnesses");
            assert!(w.verified, "witness must pass exact verification");
        }
    }

    #[test]
    fn different_degree_sequences_are_refused_by_partition() {
        let d = degree_similar(
            &named::path(4),
            &named::star(3),
            &DsOptions::default(),
        );
        assert_eq!(d.verdict, DsVerdict::NoCertified);
        assert_eq!(d.method, DsMethod::PartitionMismatch);
    }

    #[test]
    fn cospectral_trees_with_shared_degrees_get_a_definite_answer() {
        // Spider S(1,2,2) and the caterpillar on 6 vertices share the
        // degree sequence (3,2,2,1,1,1) but are not adjacency-cospectral,
        // so they cannot be degree-similar.
        let spider =
            Graph::with_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        let caterpillar =
            Graph::with_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        assert_eq!(
            spider.degree_sequence(),
            caterpillar.degree_sequence(),
            "test premise: same degree sequence"
        );
        let d = degree_similar(&spider, &caterpillar, &DsOptions::default());
        assert_ne!(d.verdict, DsVerdict::Yes, "non-cospectral trees");
    }

    #[test]
    fn decision_is_consistent_with_spectra() {
        // A YES forces cospectrality for A (similarity preserves the
        // characteristic polynomial).
        use crate::spectra::{char_adjacency, char_laplacian};
        let g = random_graph(7, 23, 0.4);
        let h = g.relabel(&[6, 2, 0, 4, 1, 5, 3]);
        let d = degree_similar(&g, &h, &DsOptions::default());
        assert_eq!(d.verdict, DsVerdict::Yes);
        assert_eq!(char_adjacency(&g), char_adjacency(&h));
        assert_eq!(char_laplacian(&g), char_laplacian(&h));
    }

    #[test]
    fn witness_normalization_gives_doubly_stochastic_sums() {
        let g = random_graph(7, 31, 0.5);
        let g = if g.is_connected() {
            g
        } else {
            named::cycle(7)
        };
        let h = g.relabel(&[3, 5, 0, 6, 1, 4, 2]);
        let d = degree_similar(&g, &h, &DsOptions::default());
        let w = d.witness.expect("similar pair");
        let n = g.n();
        let m = Mat::from_fn(n, n, |r, c| {
            w.matrix[r][c].parse::<BigRational>().unwrap()
        });
        let normalized = normalize_row_sums(&g, &h, &m).expect("connected invertible witness");
        assert!(
            complement_transfer_check(&g, &h, &normalized),
            "row-sum-1 witness must intertwine the complements"
        );
    }

    #[test]
    fn word_traces_agree_for_similar_pairs() {
        let g = random_graph(6, 41, 0.5);
        let h = g.relabel(&[5, 3, 1, 0, 4, 2]);
        assert!(word_trace_test(&g, &h, 4));
    }

    #[test]
    fn word_traces_separate_spectrally_different_graphs() {
        // Same degree sequence, different triangle counts.
        let spider = Graph::with_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        let caterpillar = Graph::with_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        assert!(
            !word_trace_test(&spider, &caterpillar, 4),
            "tr A^4 counts closed 4-walks, which differ here"
        );
    }

    #[test]
    fn similarity_space_of_identical_graphs_contains_identity() {
        let g = named::petersen();
        let space = similarity_space(&g, &g).unwrap();
        assert!(space.dim() >= 1, "commutant always contains I");
        // The identity must be a combination: check by solving nothing
        // fancier than membership of I in the span via rank comparison.
        let n = g.n();
        let id = Mat::from_fn(n, n, |r, c| {
            if r == c {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        assert!(verify_witness(&g, &g, &id));
    }
}
