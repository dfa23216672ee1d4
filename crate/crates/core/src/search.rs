//! Exhaustive unicyclic search machinery: enumeration of connected
//! unicyclic graphs up to isomorphism, a filtered search for
//! degree-similar non-isomorphic pairs, Smith-normal-form experiments on
//! coalescence families, and spot checks that small near-cycle families
//! are determined by degree similarity.
//!
//! The pair search works level by level (one vertex count at a time).
//! Candidate pairs are pruned through a chain of isomorphism-invariant
//! filters, cheapest first; only pairs agreeing on every filter key reach
//! the exact degree-similarity oracle.  Each filter is *sound*: degree
//! similarity implies equality of every key (degree sequences and
//! mu-polynomials transfer through any simultaneous similarity of A and
//! D, the Smith form is a function of the mu-polynomial data, and girth
//! is recovered from closed-walk counts plus the degree sequence).  The
//! chain therefore never discards a genuine pair, which
//! [`filter_soundness_check`] re-verifies empirically on random
//! cross-bucket pairs.

use crate::algebra::{
    bipoly_to_tpoly, determinant_divisor, rank_rational, snf, BiPoly, Mat, RatMat, TPoly,
};
use crate::canon::{are_isomorphic, canonical_cert};
use crate::constructions::{mckay_pair, path_family_pair, TreeTData};
use crate::error::{Error, Result};
use crate::graph::{coalesce, Graph, RootedGraph};
use crate::graph6::to_graph6;
use crate::named;
use crate::par;
use crate::similarity::{degree_similar, DsOptions, DsVerdict};
use crate::spectra::{mu_matrix, mu_polynomial};
use itertools::Itertools;
use num::{BigInt, BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Hard ceiling on the vertex count any search routine accepts.
pub const SEARCH_MAX_N: usize = 16;

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All trees on `k` vertices up to isomorphism, by leaf growth: every tree
/// on k vertices arises from one on k - 1 by attaching a leaf, so growing
/// every representative at every vertex and deduplicating canonically is
/// exhaustive.
pub fn enumerate_trees(k: usize) -> Result<Vec<Graph>> {
    if k == 0 || k > SEARCH_MAX_N {
        return Err(Error::InvalidInput(format!(
            "tree enumeration supports 1..={SEARCH_MAX_N} vertices, got {k}"
        )));
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..k {
        level = grow_by_pendant(&level)?;
    }
    Ok(level)
}

/// All connected unicyclic graphs on `n` vertices up to isomorphism.
///
/// For each cycle length g the level set starts at C_g and grows one
/// pendant vertex at a time with canonical deduplication.  Removing a
/// non-cycle leaf from any unicyclic graph leaves a smaller unicyclic
/// graph with the same cycle, so induction on the vertex count shows the
/// growth reaches every isomorphism class; distinct cycle lengths can
/// never collide because the unique cycle length is an invariant.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    if !(3..=SEARCH_MAX_N).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "unicyclic enumeration supports 3..={SEARCH_MAX_N} vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    for g in 3..=n {
        let mut level = vec![named::cycle(g)];
        for _ in g..n {
            level = grow_by_pendant(&level)?;
        }
        out.extend(level);
    }
    Ok(out)
}

fn grow_by_pendant(level: &[Graph]) -> Result<Vec<Graph>> {
    let mut next: BTreeMap<String, Graph> = BTreeMap::new();
    for base in level {
        for v in 0..base.n() {
            let grown = base.add_pendant(v);
            let cert = canonical_cert(&grown)?;
            next.entry(cert).or_insert(grown);
        }
    }
    Ok(next.into_values().collect())
}

/// Independent oracle for the unicyclic counts: enumerate every n-edge
/// subset of the complete graph's edge set, keep the connected ones (a
/// connected graph with n vertices and n edges is unicyclic), and count
/// canonical certificates.  Exponential, so capped at 8 vertices.
pub fn unicyclic_count_brute_force(n: usize) -> Result<usize> {
    if !(3..=8).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "brute-force unicyclic count supports 3..=8 vertices, got {n}"
        )));
    }
    let all_edges: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut certs = BTreeSet::new();
    for subset in all_edges.iter().combinations(n) {
        let mut g = Graph::empty(n);
        for &&(u, v) in &subset {
            g.set_edge(u, v, true);
        }
        if g.is_connected() {
            certs.insert(canonical_cert(&g)?);
        }
    }
    Ok(certs.len())
}

// ---------------------------------------------------------------------------
// Filter chain
// ---------------------------------------------------------------------------

/// Isomorphism-invariant filters for the pair search, cheapest first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FilterKind {
    DegreeSequence,
    Girth,
    MuPolynomial,
    Snf,
}

impl FilterKind {
    pub const ALL: [FilterKind; 4] = [
        FilterKind::DegreeSequence,
        FilterKind::Girth,
        FilterKind::MuPolynomial,
        FilterKind::Snf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FilterKind::DegreeSequence => "degree-sequence",
            FilterKind::Girth => "girth",
            FilterKind::MuPolynomial => "mu-polynomial",
            FilterKind::Snf => "snf",
        }
    }

    pub fn parse(s: &str) -> Result<FilterKind> {
        match s {
            "degree-sequence" => Ok(FilterKind::DegreeSequence),
            "girth" => Ok(FilterKind::Girth),
            "mu-polynomial" => Ok(FilterKind::MuPolynomial),
            "snf" => Ok(FilterKind::Snf),
            other => Err(Error::InvalidInput(format!(
                "unknown filter {other:?}; expected degree-sequence, girth, mu-polynomial or snf"
            ))),
        }
    }

    /// The invariant as a comparable string key.
    pub fn key(self, g: &Graph) -> Result<String> {
        match self {
            FilterKind::DegreeSequence => Ok(format!("{:?}", g.degree_sequence())),
            FilterKind::Girth => Ok(match g.girth() {
                Some(girth) => girth.to_string(),
                None => "acyclic".to_string(),
            }),
            FilterKind::MuPolynomial => Ok(mu_polynomial(g)?.format("t", "u")),
            FilterKind::Snf => {
                let s = snf(&mu_char_matrix(g))?;
                Ok(s.invariant_factors
                    .iter()
                    .map(crate::algebra::format_tpoly)
                    .join("; "))
            }
        }
    }
}

/// The matrix tI - A + mu D with entries in Q(mu)[t], the input to the
/// Smith normal form.
pub fn mu_char_matrix(g: &Graph) -> Mat<TPoly> {
    let m = mu_matrix(g);
    Mat::from_fn(g.n(), g.n(), |r, c| bipoly_to_tpoly(&m[(r, c)]))
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Largest vertex count, inclusive.  At most [`SEARCH_MAX_N`].
    pub max_n: usize,
    /// Filter chain, applied in order.
    pub filters: Vec<FilterKind>,
    /// Seed forwarded to the degree-similarity oracle.
    pub seed: u64,
    /// Cap on total work units (filter key evaluations plus oracle
    /// calls); exceeding it stops the search with `complete = false`.
    pub budget: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_n: 10,
            filters: FilterKind::ALL.to_vec(),
            seed: 0xD5,
            budget: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FilterStats {
    pub filter: String,
    /// Key computations performed (graphs in buckets of size >= 2).
    pub evaluations: u64,
    /// Candidate pairs entering this filter.
    pub pairs_before: u64,
    /// Candidate pairs still alive after splitting on the key.
    pub pairs_after: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    pub n: usize,
    pub graph_count: usize,
    pub filter_stats: Vec<FilterStats>,
    /// Pairs that agreed on every filter key and were offered to the oracle.
    pub oracle_pairs: u64,
    pub oracle_calls: u64,
    /// Non-isomorphic degree-similar pairs, as graph6 strings.
    pub yes_pairs: Vec<(String, String)>,
    /// Oracle answers that were probabilistic refusals rather than
    /// certified refusals.
    pub probabilistic_refusals: u64,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub max_n: usize,
    pub filters: Vec<String>,
    pub levels: Vec<LevelReport>,
    pub total_yes: u64,
    /// False when the work budget ran out before the search finished.
    pub complete: bool,
}

fn count_pairs(buckets: &[Vec<usize>]) -> u64 {
    buckets
        .iter()
        .map(|b| (b.len() as u64) * (b.len() as u64 - 1) / 2)
        .sum()
}

struct WorkBudget {
    remaining: Option<u64>,
}

impl WorkBudget {
    fn take(&mut self, units: u64) -> bool {
        match &mut self.remaining {
            None => true,
            Some(left) => {
                if *left >= units {
                    *left -= units;
                    true
                } else {
                    *left = 0;
                    false
                }
            }
        }
    }
}

/// Splits every bucket on the filter key, keeping only sub-buckets that
/// still hold at least two graphs.  Key computations run in parallel.
fn refine_buckets(
    graphs: &[Graph],
    buckets: Vec<Vec<usize>>,
    filter: FilterKind,
    budget: &mut WorkBudget,
) -> Result<(Vec<Vec<usize>>, FilterStats, bool)> {
    let pairs_before = count_pairs(&buckets);
    let mut evaluations = 0u64;
    let mut out = Vec::new();
    let mut within_budget = true;
    'buckets: for bucket in buckets {
        if bucket.len() < 2 {
            continue;
        }
        if !budget.take(bucket.len() as u64) {
            within_budget = false;
            break 'buckets;
        }
        evaluations += bucket.len() as u64;
        let members: Vec<Graph> = bucket.iter().map(|&i| graphs[i].clone()).collect();
        let keys: Vec<Result<String>> = par::map_vec(members, move |g| filter.key(&g));
        let mut split: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (idx, key) in bucket.into_iter().zip(keys) {
            split.entry(key?).or_default().push(idx);
        }
        for (_, sub) in split {
            if sub.len() >= 2 {
                out.push(sub);
            }
        }
    }
    let stats = FilterStats {
        filter: filter.name().to_string(),
        evaluations,
        pairs_before,
        pairs_after: count_pairs(&out),
    };
    Ok((out, stats, within_budget))
}

/// Level-by-level search for non-isomorphic degree-similar pairs among
/// all connected unicyclic graphs with at most `max_n` vertices.
pub fn ds_pair_search(config: &SearchConfig) -> Result<SearchReport> {
    if !(3..=SEARCH_MAX_N).contains(&config.max_n) {
        return Err(Error::Precondition(format!(
            "search max_n must lie in 3..={SEARCH_MAX_N}, got {}",
            config.max_n
        )));
    }
    if config.filters.is_empty() {
        return Err(Error::Precondition(
            "search needs at least one filter; running the oracle on every pair is not supported"
                .into(),
        ));
    }
    let opts = DsOptions {
        seed: config.seed,
        ..DsOptions::default()
    };
    let mut budget = WorkBudget {
        remaining: config.budget,
    };
    let mut levels = Vec::new();
    let mut total_yes = 0u64;
    let mut complete = true;
    'levels: for n in 3..=config.max_n {
        let graphs = enumerate_unicyclic(n)?;
        let mut buckets: Vec<Vec<usize>> = if graphs.len() >= 2 {
            vec![(0..graphs.len()).collect()]
        } else {
            Vec::new()
        };
        let mut filter_stats = Vec::new();
        let mut level_complete = true;
        for &filter in &config.filters {
            let (next, stats, within) = refine_buckets(&graphs, buckets, filter, &mut budget)?;
            buckets = next;
            filter_stats.push(stats);
            if !within {
                level_complete = false;
                break;
            }
        }
        let oracle_pairs = count_pairs(&buckets);
        let mut oracle_calls = 0u64;
        let mut yes_pairs = Vec::new();
        let mut probabilistic_refusals = 0u64;
        if level_complete {
            'oracle: for bucket in &buckets {
                for (slot_a, slot_b) in (0..bucket.len()).tuple_combinations() {
                    if !budget.take(1) {
                        level_complete = false;
                        break 'oracle;
                    }
                    let (a, b) = (bucket[slot_a], bucket[slot_b]);
                    let decision = degree_similar(&graphs[a], &graphs[b], &opts);
                    oracle_calls += 1;
                    match decision.verdict {
                        DsVerdict::Yes => {
                            yes_pairs.push((to_graph6(&graphs[a]), to_graph6(&graphs[b])));
                        }
                        DsVerdict::NoProbabilistic => probabilistic_refusals += 1,
                        DsVerdict::NoCertified => {}
                    }
                }
            }
        }
        total_yes += yes_pairs.len() as u64;
        levels.push(LevelReport {
            n,
            graph_count: graphs.len(),
            filter_stats,
            oracle_pairs,
            oracle_calls,
            yes_pairs,
            probabilistic_refusals,
            complete: level_complete,
        });
        if !level_complete {
            complete = false;
            break 'levels;
        }
    }
    Ok(SearchReport {
        max_n: config.max_n,
        filters: config.filters.iter().map(|f| f.name().to_string()).collect(),
        levels,
        total_yes,
        complete,
    })
}

/// Samples random pairs of enumerated unicyclic graphs whose filter keys
/// differ and runs the exact oracle on them: a degree-similar answer
/// would mean an unsound filter.  Returns the number of oracle calls
/// made.
pub fn filter_soundness_check(n: usize, trials: usize, seed: u64) -> Result<u64> {
    let graphs = enumerate_unicyclic(n)?;
    if graphs.len() < 2 {
        return Ok(0);
    }
    let keys: Vec<String> = graphs
        .iter()
        .map(|g| {
            FilterKind::ALL
                .iter()
                .map(|f| f.key(g))
                .collect::<Result<Vec<_>>>()
                .map(|parts| parts.join(" | "))
        })
        .collect::<Result<Vec<_>>>()?;
    let opts = DsOptions {
        seed,
        ..DsOptions::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut calls = 0u64;
    for _ in 0..trials {
        let a = rng.gen_range(0..graphs.len());
        let b = rng.gen_range(0..graphs.len());
        if a == b || keys[a] == keys[b] {
            continue;
        }
        let decision = degree_similar(&graphs[a], &graphs[b], &opts);
        calls += 1;
        if decision.verdict == DsVerdict::Yes {
            return Err(Error::DataValidation {
                check: "filter-soundness".into(),
                msg: format!(
                    "graphs {} and {} differ on a filter key yet are degree similar",
                    to_graph6(&graphs[a]),
                    to_graph6(&graphs[b])
                ),
            });
        }
    }
    Ok(calls)
}

// ---------------------------------------------------------------------------
// Smith-normal-form family experiment
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseKind {
    /// Path rooted at an endpoint; the parameter is the path length in
    /// edges.
    Path,
    /// Star rooted at its centre; the parameter is the number of leaves.
    Star,
}

impl BaseKind {
    pub fn name(self) -> &'static str {
        match self {
            BaseKind::Path => "path",
            BaseKind::Star => "star",
        }
    }

    pub fn parse(s: &str) -> Result<BaseKind> {
        match s {
            "path" => Ok(BaseKind::Path),
            "star" => Ok(BaseKind::Star),
            other => Err(Error::InvalidInput(format!(
                "unknown base kind {other:?}; expected path or star"
            ))),
        }
    }
}

/// Everything measured on one coalescence pair.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyInstance {
    pub label: String,
    pub n: usize,
    /// The two mu-polynomials agree.
    pub psi_equal: bool,
    /// Both Smith forms have the same invariant factors.
    pub snf_equal_between_pair: bool,
    /// Each Smith form is diag(1, ..., 1, d).
    pub snf_ones_then_psi: bool,
    /// The single nontrivial factor is the mu-polynomial itself.
    pub last_factor_is_psi: bool,
    /// First n - 1 invariant factors are units, i.e. the (n-1)-st
    /// determinant divisor is 1.
    pub second_divisor_trivial: bool,
    /// Independent certificate for the same fact: a random Krylov basis
    /// of A - mu0 D at a rational mu0 reached full rank, so the matrix is
    /// non-derogatory over Q(mu).
    pub cyclic_certificate: bool,
    pub pair_identical: bool,
    pub pair_isomorphic: bool,
    pub ds_verdict: String,
}

impl FamilyInstance {
    /// The conjecture-level expectations: cospectrality in mu holds and
    /// the pair is a genuine non-similar pair (unless it is literally the
    /// same labeled graph, where degree similarity is trivially yes).
    pub fn expected_core(&self) -> bool {
        if !self.psi_equal {
            return false;
        }
        if self.pair_identical {
            self.ds_verdict == "Yes"
        } else {
            !self.pair_isomorphic && self.ds_verdict != "Yes"
        }
    }

    /// The stronger Smith-form expectations proved for path and star
    /// bases: both forms are diag(1, ..., 1, psi).
    pub fn expected_snf_shape(&self) -> bool {
        self.snf_equal_between_pair
            && self.snf_ones_then_psi
            && self.last_factor_is_psi
            && self.second_divisor_trivial
            && self.cyclic_certificate
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SnfFamilyReport {
    pub base: String,
    pub instances: Vec<FamilyInstance>,
    /// Every instance met the core expectations (equal mu-polynomials,
    /// genuinely non-similar pair).
    pub all_expected: bool,
    /// Every instance also had Smith form diag(1, ..., 1, psi).  A
    /// nontrivial (n-1)-st determinant divisor is a reportable finding,
    /// not an error: star bases produce twin leaves at the coalescence
    /// root, which force (t + mu)-eigenvectors and make the pencil
    /// derogatory.
    pub snf_shape_all: bool,
    /// Deviations worth reporting in detail.
    pub findings: Vec<String>,
}

/// Checks that a random specialization A - mu0 D has a cyclic vector,
/// certifying that tI - A + mu D is non-derogatory over Q(mu), i.e. its
/// (n-1)-st determinant divisor is 1.  One-sided: `false` only means no
/// certificate was found.
pub fn non_derogatory_certificate(g: &Graph, seed: u64) -> Result<bool> {
    let n = g.n();
    if n <= 1 {
        return Ok(true);
    }
    let a = g.adjacency_matrix();
    let degs = g.degrees();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..4u64 {
        let mu0 = BigRational::from_integer(BigInt::from(attempt + 2));
        let x = RatMat::from_fn(n, n, |r, c| {
            if r == c {
                -(&mu0) * BigRational::from_integer(BigInt::from(degs[r]))
            } else {
                BigRational::from_integer(a[(r, c)].clone())
            }
        });
        let mut v: Vec<BigRational> = (0..n)
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-9i64..=9))))
            .collect();
        let mut krylov = RatMat::from_fn(n, n, |_, _| BigRational::zero());
        for col in 0..n {
            for row in 0..n {
                krylov[(row, col)] = v[row].clone();
            }
            let mut next = vec![BigRational::zero(); n];
            for (row, slot) in next.iter_mut().enumerate() {
                for (k, vk) in v.iter().enumerate() {
                    if !x[(row, k)].is_zero() {
                        *slot += &x[(row, k)] * vk;
                    }
                }
            }
            v = next;
        }
        if rank_rational(&krylov) == n {
            return Ok(true);
        }
    }
    Ok(false)
}

fn examine_pair(label: &str, g1: &Graph, g2: &Graph, seed: u64) -> Result<FamilyInstance> {
    let n = g1.n();
    let psi1 = mu_polynomial(g1)?;
    let psi2 = mu_polynomial(g2)?;
    let psi_equal = psi1 == psi2;
    let m1 = mu_char_matrix(g1);
    let m2 = mu_char_matrix(g2);
    let s1 = snf(&m1)?;
    let s2 = snf(&m2)?;
    let snf_equal_between_pair = s1.same_factors(&s2);
    let snf_ones_then_psi =
        s1.is_ones_then_single_nontrivial() && s2.is_ones_then_single_nontrivial();
    let psi_t1 = bipoly_to_tpoly(&psi1);
    let psi_t2 = bipoly_to_tpoly(&psi2);
    let last_factor_is_psi = s1.rank == n
        && s2.rank == n
        && s1.invariant_factors[n - 1] == psi_t1
        && s2.invariant_factors[n - 1] == psi_t2;
    let second_divisor_trivial = s1.rank == n
        && s2.rank == n
        && s1.invariant_factors[..n - 1].iter().all(|f| f == &TPoly::one())
        && s2.invariant_factors[..n - 1].iter().all(|f| f == &TPoly::one());
    let cyclic_certificate =
        non_derogatory_certificate(g1, seed)? && non_derogatory_certificate(g2, seed ^ 1)?;
    let pair_identical = g1.n() == g2.n() && g1.edges() == g2.edges();
    let pair_isomorphic = are_isomorphic(g1, g2)?;
    let decision = degree_similar(g1, g2, &DsOptions::default());
    Ok(FamilyInstance {
        label: label.to_string(),
        n,
        psi_equal,
        snf_equal_between_pair,
        snf_ones_then_psi,
        last_factor_is_psi,
        second_divisor_trivial,
        cyclic_certificate,
        pair_identical,
        pair_isomorphic,
        ds_verdict: format!("{:?}", decision.verdict),
    })
}

fn collect_findings(instance: &FamilyInstance, findings: &mut Vec<String>) {
    if !instance.psi_equal {
        findings.push(format!("{}: mu-polynomials differ", instance.label));
    }
    if !instance.pair_identical && instance.pair_isomorphic {
        findings.push(format!("{}: pair is isomorphic", instance.label));
    }
    if !instance.pair_identical && instance.ds_verdict == "Yes" {
        findings.push(format!("{}: pair is degree similar", instance.label));
    }
    if !instance.second_divisor_trivial {
        findings.push(format!(
            "{}: (n-1)-st determinant divisor is nontrivial",
            instance.label
        ));
    }
    if !instance.last_factor_is_psi {
        findings.push(format!(
            "{}: last invariant factor differs from the mu-polynomial",
            instance.label
        ));
    }
    if instance.second_divisor_trivial && !instance.cyclic_certificate {
        findings.push(format!(
            "{}: no cyclic-vector certificate found despite trivial divisors",
            instance.label
        ));
    }
}

/// Runs the coalescence pair through its paces for every parameter in
/// `m_lo..=m_hi`: path bases attach a path by its endpoint (m edges,
/// m = 0 degenerates to the two coalescence roots themselves), star bases
/// attach a star by its centre (m leaves, m >= 2).
pub fn snf_family_experiment(
    data: &TreeTData,
    base: BaseKind,
    m_lo: usize,
    m_hi: usize,
) -> Result<SnfFamilyReport> {
    if m_lo > m_hi {
        return Err(Error::InvalidInput(format!(
            "empty parameter range {m_lo}..={m_hi}"
        )));
    }
    if base == BaseKind::Star && m_lo < 2 {
        return Err(Error::Precondition(
            "star bases need at least 2 leaves; 0 and 1 degenerate to path bases".into(),
        ));
    }
    let mut instances = Vec::new();
    let mut findings = Vec::new();
    for m in m_lo..=m_hi {
        let (g1, g2) = match base {
            BaseKind::Path => path_family_pair(data, m)?,
            BaseKind::Star => mckay_pair(data, &RootedGraph::new(named::star(m), 0)?)?,
        };
        let label = format!("{} m={m}", base.name());
        let instance = examine_pair(&label, &g1, &g2, 0x5EED ^ m as u64)?;
        collect_findings(&instance, &mut findings);
        instances.push(instance);
    }
    let all_expected = instances.iter().all(FamilyInstance::expected_core);
    let snf_shape_all = instances.iter().all(FamilyInstance::expected_snf_shape);
    Ok(SnfFamilyReport {
        base: base.name().into(),
        instances,
        all_expected,
        snf_shape_all,
        findings,
    })
}

/// Uniform random labeled tree on `n` vertices by decoding a random
/// Pruefer sequence.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1, "trees need at least one vertex");
    let mut g = Graph::empty(n);
    if n == 1 {
        return g;
    }
    if n == 2 {
        g.set_edge(0, 1, true);
        return g;
    }
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in &prufer {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        g.set_edge(leaf, v, true);
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    g.set_edge(rest[0], rest[1], true);
    g
}

/// The same measurements on random rooted tree bases with 2..=`max_base`
/// vertices.  Cospectrality in mu is a theorem for every base, but the
/// Smith-form shape is only conjectural here, so shape deviations land in
/// `findings` and `all_expected` tracks the core expectations alone.
pub fn snf_random_tree_experiment(
    data: &TreeTData,
    trials: usize,
    max_base: usize,
    seed: u64,
) -> Result<SnfFamilyReport> {
    if !(2..=6).contains(&max_base) {
        return Err(Error::Precondition(format!(
            "random tree bases support 2..=6 vertices, got {max_base}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::new();
    let mut findings = Vec::new();
    for trial in 0..trials {
        let size = rng.gen_range(2..=max_base);
        let tree = random_tree(size, &mut rng);
        let root = rng.gen_range(0..size);
        let base = RootedGraph::new(tree, root)?;
        let (g1, g2) = mckay_pair(data, &base)?;
        let label = format!("tree trial={trial} size={size} root={root}");
        let instance = examine_pair(&label, &g1, &g2, seed ^ trial as u64)?;
        collect_findings(&instance, &mut findings);
        instances.push(instance);
    }
    let all_expected = instances.iter().all(FamilyInstance::expected_core);
    let snf_shape_all = instances.iter().all(FamilyInstance::expected_snf_shape);
    Ok(SnfFamilyReport {
        base: "random-tree".into(),
        instances,
        all_expected,
        snf_shape_all,
        findings,
    })
}

// ---------------------------------------------------------------------------
// Families determined by degree similarity
// ---------------------------------------------------------------------------

/// The unicyclic graphs on `n` vertices with girth at least n - 2: the
/// cycle, the cycle with one pendant vertex, and the three girth-(n-2)
/// shapes (a pendant path of two edges, two pendant vertices sharing an
/// attachment, and two pendant vertices at each possible cycle distance).
pub fn near_cycle_family(n: usize) -> Result<Vec<Graph>> {
    if !(3..=SEARCH_MAX_N).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "near-cycle family supports 3..={SEARCH_MAX_N} vertices, got {n}"
        )));
    }
    let mut out = vec![named::cycle(n)];
    if n >= 4 {
        out.push(named::cycle(n - 1).add_pendant(0));
    }
    if n >= 5 {
        let g = n - 2;
        let tail = named::cycle(g).add_pendant(0);
        out.push(tail.add_pendant(g));
        out.push(named::cycle(g).add_pendant(0).add_pendant(0));
        for d in 1..=g / 2 {
            out.push(named::cycle(g).add_pendant(0).add_pendant(d));
        }
    }
    Ok(out)
}

/// Trees without degree-2 vertices whose maximum degree is attained at a
/// single vertex, paired with that vertex.
fn branching_trees(k: usize) -> Result<Vec<RootedGraph>> {
    let mut out = Vec::new();
    for t in enumerate_trees(k)? {
        let degs = t.degrees();
        if degs.contains(&2) {
            continue;
        }
        let max = *degs.iter().max().expect("nonempty tree");
        if max < 3 || degs.iter().filter(|&&d| d == max).count() != 1 {
            continue;
        }
        let root = degs.iter().position(|&d| d == max).expect("max exists");
        out.push(RootedGraph::new(t, root)?);
    }
    Ok(out)
}

/// Cycles with one branching tree coalesced at the tree's unique
/// maximum-degree vertex: all such graphs on `n` vertices, over every
/// cycle length and every admissible tree.
pub fn cycle_tree_family(n: usize) -> Result<Vec<Graph>> {
    if !(3..=SEARCH_MAX_N).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "cycle-tree family supports 3..={SEARCH_MAX_N} vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    for tree_size in 4..=n.saturating_sub(2) {
        let g = n + 1 - tree_size;
        if g < 3 {
            continue;
        }
        for tree in branching_trees(tree_size)? {
            let cycle = RootedGraph::new(named::cycle(g), 0)?;
            out.push(coalesce(&cycle, &tree));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct DsDeterminedReport {
    pub min_n: usize,
    pub max_n: usize,
    /// Family members tested.
    pub instances: u64,
    /// Degree-similarity oracle calls.
    pub comparisons: u64,
    /// Pairs the oracle affirmed; each must have matched canonically.
    pub yes_matches: u64,
    /// Whether candidates were restricted to matching degree sequence and
    /// mu-polynomial before the oracle.
    pub prefiltered: bool,
    /// Degree-similar but canonically different pairs (family member,
    /// other graph) as graph6 strings.  Expected empty.
    pub violations: Vec<(String, String)>,
}

/// Verifies that every member of the near-cycle and cycle-tree families
/// is determined by degree similarity among connected unicyclic graphs:
/// any same-order unicyclic graph the oracle affirms must be the member
/// itself.  With `prefilter` the oracle only sees candidates agreeing on
/// degree sequence and mu-polynomial, which is sound because degree
/// similarity forces both.
pub fn ds_determined_assertions(
    min_n: usize,
    max_n: usize,
    prefilter: bool,
) -> Result<DsDeterminedReport> {
    if min_n < 3 || max_n > SEARCH_MAX_N || min_n > max_n {
        return Err(Error::Precondition(format!(
            "vertex range {min_n}..={max_n} outside 3..={SEARCH_MAX_N}"
        )));
    }
    let opts = DsOptions::default();
    let mut instances = 0u64;
    let mut comparisons = 0u64;
    let mut yes_matches = 0u64;
    let mut violations = Vec::new();
    for n in min_n..=max_n {
        let universe = enumerate_unicyclic(n)?;
        let universe_certs: Vec<String> = universe
            .iter()
            .map(canonical_cert)
            .collect::<Result<Vec<_>>>()?;
        let universe_keys: Vec<(Vec<usize>, String)> = if prefilter {
            let psis: Vec<Result<BiPoly>> =
                par::map_vec(universe.clone(), |g| mu_polynomial(&g));
            universe
                .iter()
                .zip(psis)
                .map(|(g, psi)| Ok((g.degree_sequence(), psi?.format("t", "u"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        let mut members = near_cycle_family(n)?;
        members.extend(cycle_tree_family(n)?);
        let mut seen = BTreeSet::new();
        for member in members {
            let member_cert = canonical_cert(&member)?;
            if !seen.insert(member_cert.clone()) {
                continue;
            }
            instances += 1;
            let member_key = if prefilter {
                Some((
                    member.degree_sequence(),
                    mu_polynomial(&member)?.format("t", "u"),
                ))
            } else {
                None
            };
            for (idx, other) in universe.iter().enumerate() {
                if let Some(key) = &member_key {
                    if &universe_keys[idx] != key {
                        continue;
                    }
                }
                let decision = degree_similar(&member, other, &opts);
                comparisons += 1;
                if decision.verdict == DsVerdict::Yes {
                    yes_matches += 1;
                    if universe_certs[idx] != member_cert {
                        violations.push((to_graph6(&member), to_graph6(other)));
                    }
                }
            }
        }
    }
    Ok(DsDeterminedReport {
        min_n,
        max_n,
        instances,
        comparisons,
        yes_matches,
        prefiltered: prefilter,
        violations,
    })
}


#[cfg(test)]
mod profile_scratch {
    use super::*;
    use std::time::Instant;

    #[test]
    #[ignore = "scratch profiling"]
    fn probe_derogatory_star_pencil() {
        use crate::algebra::gcd_bipoly_t;
        let data = TreeTData::builtin();
        for (label, base) in [
            ("tree alone (m=0)", None),
            ("star m=2", Some(RootedGraph::new(named::star(2), 0).unwrap())),
            ("path m=1", Some(crate::constructions::path_base(1))),
            ("path m=2", Some(crate::constructions::path_base(2))),
        ] {
            let g = match base {
                None => data.graph.clone(),
                Some(b) => mckay_pair(&data, &b).unwrap().0,
            };
            let psi = mu_polynomial(&g).unwrap();
            // (t + mu) | psi  <=>  psi(-mu, mu) == 0 as a polynomial in mu;
            // enough sample points of the bounded-degree univariate settle it.
            let bound = psi.deg_t().unwrap_or(0) + psi.deg_mu().unwrap_or(0) + 1;
            let divisible = (1..=bound as i64 + 1).all(|k| {
                let mk = num::BigRational::from_integer(num::BigInt::from(k));
                psi.eval(&(-mk.clone()), &mk).is_zero()
            });
            let rows = psi.t_rows();
            let dpsi = BiPoly::new(
                rows.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(i, row)| {
                        row * &crate::algebra::QPoly::constant(
                            num::BigRational::from_integer(num::BigInt::from(i)),
                        )
                    })
                    .collect(),
            );
            let gg = gcd_bipoly_t(&psi, &dpsi).unwrap();
            eprintln!(
                "{label}: n={} (t+mu)|psi: {}  deg_t gcd(psi, psi_t) = {:?}",
                g.n(),
                divisible,
                gg.deg_t()
            );
            eprintln!("   cyclic certificate: {}", non_derogatory_certificate(&g, 17).unwrap());
        }
    }

    #[test]
    #[ignore = "scratch profiling"]
    fn profile_examine_pair_steps() {
        let data = TreeTData::builtin();
        let (g1, g2) = mckay_pair(&data, &RootedGraph::new(named::star(2), 0).unwrap()).unwrap();
        eprintln!("n = {}", g1.n());
        let t0 = Instant::now();
        let psi1 = mu_polynomial(&g1).unwrap();
        eprintln!("mu_polynomial g1: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let _psi2 = mu_polynomial(&g2).unwrap();
        eprintln!("mu_polynomial g2: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let m1 = mu_char_matrix(&g1);
        eprintln!("mu_char_matrix: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let s1 = snf(&m1).unwrap();
        eprintln!("snf g1: {:?} (ones-then: {})", t0.elapsed(), s1.is_ones_then_single_nontrivial());
        let t0 = Instant::now();
        let _ = bipoly_to_tpoly(&psi1);
        eprintln!("bipoly_to_tpoly: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let cyc = non_derogatory_certificate(&g1, 1).unwrap();
        eprintln!("cyclic cert: {:?} ({cyc})", t0.elapsed());
        let t0 = Instant::now();
        let iso = are_isomorphic(&g1, &g2).unwrap();
        eprintln!("are_isomorphic: {:?} ({iso})", t0.elapsed());
        let t0 = Instant::now();
        let d = degree_similar(&g1, &g2, &DsOptions::default());
        eprintln!("degree_similar: {:?} ({:?})", t0.elapsed(), d.verdict);
    }
}
