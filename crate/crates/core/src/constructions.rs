//! Generators for cospectral and degree-similar pairs.
//!
//! Two constructions live here.  The first starts from a verified
//! degree-similar pair sharing a degree partition and rewrites the induced
//! and crossing subgraphs cell by cell: each cell's induced subgraph can be
//! kept, complemented, or emptied, and likewise each bipartite subgraph
//! between two cells.  A conjugating witness whose blocks have row and
//! column sums one commutes with every such rewrite, so all
//! 3^t * 3^C(t,2) operation vectors yield adjacency-cospectral pairs with
//! cospectral complements, and the rewrites that keep the degree partition
//! yield degree-similar pairs.
//!
//! The second is rooted coalescence onto a fixed 16-vertex tree at either
//! of two distinguished roots (McKay's tree).  For any nontrivial rooted
//! base the two coalescences are non-isomorphic but share the bivariate
//! mu polynomial, and for path bases the characteristic matrices
//! tI - A + mu D even share their Smith normal form over Q(mu)[t].

use crate::algebra::{gcd_bipoly_t, BiPoly};
use crate::canon::are_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{coalesce, DegreePartition, Graph, RootedGraph};
use crate::graph6::parse_edge_list;
use crate::named;
use crate::par;
use crate::spectra::{
    char_adjacency, char_laplacian, char_normalized, char_signless_laplacian, mu_minor_det,
    mu_polynomial, mu_principal_det,
};
use num::{BigInt, BigRational};
use serde::Serialize;

/// Rewrite choice for the subgraph induced on one partition cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PartOp {
    Keep,
    ComplementInside,
    EmptyInside,
}

/// Rewrite choice for the bipartite subgraph between two cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairOp {
    Keep,
    BipComplement,
    BipEmpty,
}

/// Unordered cell pairs (i, j) with i < j, lexicographic.
pub fn cell_pairs(t: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(t * (t.saturating_sub(1)) / 2);
    for i in 0..t {
        for j in i + 1..t {
            out.push((i, j));
        }
    }
    out
}

/// A full rewrite plan over a degree partition with t cells: one `PartOp`
/// per cell and one `PairOp` per unordered cell pair in `cell_pairs` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpVector {
    pub part_ops: Vec<PartOp>,
    pub pair_ops: Vec<PairOp>,
}

const PART_CHOICES: [PartOp; 3] = [PartOp::Keep, PartOp::ComplementInside, PartOp::EmptyInside];
const PAIR_CHOICES: [PairOp; 3] = [PairOp::Keep, PairOp::BipComplement, PairOp::BipEmpty];

impl OpVector {
    /// The all-Keep plan.
    pub fn identity(t: usize) -> Self {
        OpVector {
            part_ops: vec![PartOp::Keep; t],
            pair_ops: vec![PairOp::Keep; t * t.saturating_sub(1) / 2],
        }
    }

    /// Number of distinct plans for t cells: 3^t * 3^C(t,2).  None when the
    /// count does not fit in u128.
    pub fn count(t: usize) -> Option<u128> {
        let digits = t + t * t.saturating_sub(1) / 2;
        3u128.checked_pow(u32::try_from(digits).ok()?)
    }

    /// Decodes a mixed-radix base-3 index, little-endian, part digits first
    /// and pair digits after, pairs in `cell_pairs` order.
    pub fn from_index(t: usize, index: u128) -> Option<Self> {
        if index >= Self::count(t)? {
            return None;
        }
        let mut rem = index;
        let mut digit = || {
            let d = (rem % 3) as usize;
            rem /= 3;
            d
        };
        let part_ops = (0..t).map(|_| PART_CHOICES[digit()]).collect();
        let pair_ops = (0..t * t.saturating_sub(1) / 2)
            .map(|_| PAIR_CHOICES[digit()])
            .collect();
        Some(OpVector { part_ops, pair_ops })
    }

    /// Inverse of `from_index`.
    pub fn index(&self) -> u128 {
        let mut acc = 0u128;
        let mut place = 1u128;
        for op in &self.part_ops {
            let d = PART_CHOICES.iter().position(|c| c == op).unwrap() as u128;
            acc += d * place;
            place *= 3;
        }
        for op in &self.pair_ops {
            let d = PAIR_CHOICES.iter().position(|c| c == op).unwrap() as u128;
            acc += d * place;
            place *= 3;
        }
        acc
    }

    /// All plans for t cells, by ascending index.  Refused above the cap to
    /// keep accidental exponential blowups out of library calls.
    pub fn all_for(t: usize) -> Result<Vec<OpVector>> {
        const CAP: u128 = 1_000_000;
        let count = Self::count(t).ok_or_else(|| {
            Error::TooLarge(format!("operation vector count for t = {t} overflows"))
        })?;
        if count > CAP {
            return Err(Error::TooLarge(format!(
                "{count} operation vectors for t = {t} exceeds the cap {CAP}"
            )));
        }
        Ok((0..count)
            .map(|i| Self::from_index(t, i).unwrap())
            .collect())
    }
}

fn check_aligned(g: &Graph, pi: &DegreePartition) -> Result<()> {
    if DegreePartition::of(g) != *pi {
        return Err(Error::Precondition(
            "partition is not the degree partition of the graph".into(),
        ));
    }
    Ok(())
}

/// Applies the rewrite plan to one graph.  `pi` must be the degree
/// partition of `g`, and the plan's lengths must fit `pi`.
pub fn apply_op_vector(g: &Graph, pi: &DegreePartition, ops: &OpVector) -> Result<Graph> {
    check_aligned(g, pi)?;
    let t = pi.part_count();
    if ops.part_ops.len() != t || ops.pair_ops.len() != t * t.saturating_sub(1) / 2 {
        return Err(Error::InvalidInput(format!(
            "operation vector sized for {} cells applied to a partition with {t}",
            ops.part_ops.len()
        )));
    }
    let mut h = g.clone();
    for (cell, op) in pi.cells.iter().zip(&ops.part_ops) {
        for a in 0..cell.len() {
            for b in a + 1..cell.len() {
                let (u, v) = (cell[a], cell[b]);
                match op {
                    PartOp::Keep => {}
                    PartOp::ComplementInside => h.set_edge(u, v, !h.has_edge(u, v)),
                    PartOp::EmptyInside => h.set_edge(u, v, false),
                }
            }
        }
    }
    for (&(i, j), op) in cell_pairs(t).iter().zip(&ops.pair_ops) {
        for &u in &pi.cells[i] {
            for &v in &pi.cells[j] {
                match op {
                    PairOp::Keep => {}
                    PairOp::BipComplement => h.set_edge(u, v, !h.has_edge(u, v)),
                    PairOp::BipEmpty => h.set_edge(u, v, false),
                }
            }
        }
    }
    Ok(h)
}

/// Applies one rewrite plan to both members of a pair sharing `pi`.
pub fn apply_op_vector_pair(
    g1: &Graph,
    g2: &Graph,
    pi: &DegreePartition,
    ops: &OpVector,
) -> Result<(Graph, Graph)> {
    Ok((
        apply_op_vector(g1, pi, ops)?,
        apply_op_vector(g2, pi, ops)?,
    ))
}

/// True when the rewritten graph has exactly the input degree partition
/// again, cell for cell.  Keep everywhere is trivially preserving;
/// complementing inside a ((|V_i|-1)/2)-regular induced cell or across a
/// half-regular bipartite pair preserves every degree.
pub fn degree_preserving(pi: &DegreePartition, g: &Graph, ops: &OpVector) -> Result<bool> {
    let h = apply_op_vector(g, pi, ops)?;
    Ok(DegreePartition::of(&h) == *pi)
}

/// The linear factor t + mu in the shared-minor gcd of the coalescence
/// family.
pub fn factor_alpha() -> BiPoly {
    &BiPoly::t() + &BiPoly::mu()
}

/// The quadratic factor t^2 + 3 mu t + 2 mu^2 - 1.
pub fn factor_beta() -> BiPoly {
    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    let mut p = BiPoly::monomial(q(1), 2, 0);
    p = &p + &BiPoly::monomial(q(3), 1, 1);
    p = &p + &BiPoly::monomial(q(2), 0, 2);
    &p - &BiPoly::one()
}

/// The cubic factor t^3 + 6 mu t^2 + (11 mu^2 - 3) t + 6 mu^3 - 5 mu.
pub fn factor_gamma() -> BiPoly {
    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    let mut p = BiPoly::monomial(q(1), 3, 0);
    p = &p + &BiPoly::monomial(q(6), 2, 1);
    p = &p + &BiPoly::monomial(q(11), 1, 2);
    p = &p + &BiPoly::monomial(q(-3), 1, 0);
    p = &p + &BiPoly::monomial(q(6), 0, 3);
    p = &p + &BiPoly::monomial(q(-5), 0, 1);
    p
}

/// The 16-vertex tree with two distinguished roots used by the coalescence
/// family.  Vertices are 0-based; the classical presentation numbers them
/// 1..16 with roots 4 and 7.
#[derive(Clone, Debug)]
pub struct TreeTData {
    pub graph: Graph,
    pub roots: (usize, usize),
}

/// Edges of the tree in the distinguished labeling.
const TREE_T_EDGES: [(usize, usize); 15] = [
    (0, 1),
    (1, 2),
    (2, 10),
    (10, 11),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 12),
    (12, 13),
    (13, 14),
    (5, 6),
    (6, 7),
    (7, 8),
    (8, 9),
    (8, 15),
];

impl TreeTData {
    /// The shipped tree in its distinguished labeling, roots 3 and 6.
    pub fn builtin() -> Self {
        TreeTData {
            graph: Graph::with_edges(16, &TREE_T_EDGES).expect("built-in tree edges are valid"),
            roots: (3, 6),
        }
    }

    /// Parses an edge-list file carrying a `# roots: a b` directive.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut roots: Option<(usize, usize)> = None;
        for line in text.lines() {
            let trimmed = line.trim();
            if let Some(rest) = trimmed.strip_prefix("# roots:") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(Error::InvalidInput(
                        "roots directive must list exactly two vertices".into(),
                    ));
                }
                let a = parts[0].parse::<usize>().map_err(|_| {
                    Error::InvalidInput(format!("bad root vertex {:?}", parts[0]))
                })?;
                let b = parts[1].parse::<usize>().map_err(|_| {
                    Error::InvalidInput(format!("bad root vertex {:?}", parts[1]))
                })?;
                roots = Some((a, b));
            }
        }
        let graph = parse_edge_list(text)?;
        let roots = roots.ok_or_else(|| {
            Error::InvalidInput("tree data needs a `# roots: a b` line".into())
        })?;
        if roots.0 >= graph.n() || roots.1 >= graph.n() || roots.0 == roots.1 {
            return Err(Error::InvalidInput(format!(
                "roots {:?} invalid for a graph on {} vertices",
                roots,
                graph.n()
            )));
        }
        Ok(TreeTData { graph, roots })
    }

    /// Edge-list serialization including the roots directive.
    pub fn to_text(&self) -> String {
        let mut out = String::from("# mckay-tree16\n");
        out.push_str(&format!("# roots: {} {}\n", self.roots.0, self.roots.1));
        out.push_str(&format!("{}\n", self.graph.n()));
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Coalesces the base onto the tree at each root in turn.  The tree keeps
/// labels 0..15 and the base's non-root vertices follow from 16, so the
/// first attached vertex is index 16 in both outputs.
pub fn mckay_pair(data: &TreeTData, base: &RootedGraph) -> Result<(Graph, Graph)> {
    if base.graph.n() < 2 {
        return Err(Error::Precondition(
            "coalescence base must have at least 2 vertices".into(),
        ));
    }
    let t1 = RootedGraph::new(data.graph.clone(), data.roots.0)?;
    let t2 = RootedGraph::new(data.graph.clone(), data.roots.1)?;
    Ok((coalesce(&t1, base), coalesce(&t2, base)))
}

/// Path on m+1 vertices rooted at an endpoint.
pub fn path_base(m: usize) -> RootedGraph {
    RootedGraph::new(named::path(m + 1), 0).expect("endpoint root is valid")
}

/// The m-th member pair of the path family.  m = 0 attaches a single
/// vertex, which is the identity coalescence, so the pair is the tree
/// twice.
pub fn path_family_pair(data: &TreeTData, m: usize) -> Result<(Graph, Graph)> {
    if m == 0 {
        return Ok((data.graph.clone(), data.graph.clone()));
    }
    mckay_pair(data, &path_base(m))
}

/// One named validation check with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Full validation report for a candidate tree.
#[derive(Clone, Debug, Serialize)]
pub struct TreeValidationReport {
    pub checks: Vec<CheckOutcome>,
    pub all_passed: bool,
}

impl TreeValidationReport {
    pub fn failed_checks(&self) -> Vec<&CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn divides(d: &BiPoly, p: &BiPoly) -> Result<bool> {
    // d is assumed primitive with positive leading coefficient, the normal
    // form the gcd routine returns.
    Ok(gcd_bipoly_t(d, p)? == *d)
}

/// Validates a candidate 16-vertex tree with two roots against the shape,
/// fingerprint, and coalescence properties the shipped tree satisfies.
///
/// The fingerprint checks read the candidate in its given labeling, so
/// they pin down the distinguished labeling as well as the shape.  The
/// coalescence checks are labeling-independent.
pub fn validate_tree_t(data: &TreeTData) -> Result<TreeValidationReport> {
    let mut checks = Vec::new();
    let g = &data.graph;

    let shape_ok = g.n() == 16 && g.num_edges() == 15 && g.is_connected();
    checks.push(CheckOutcome::new(
        "tree-shape",
        shape_ok,
        format!(
            "16 vertices, 15 edges, connected; got n = {}, m = {}, connected = {}",
            g.n(),
            g.num_edges(),
            g.is_connected()
        ),
    ));
    if !shape_ok {
        // Later checks assume a tree of the right size.
        return Ok(TreeValidationReport {
            checks,
            all_passed: false,
        });
    }

    let beta = factor_beta();
    let gamma = factor_gamma();
    for (name, verts) in [
        ("beta-fingerprint-11-12", vec![10usize, 11]),
        ("beta-fingerprint-14-15", vec![13, 14]),
        ("beta-fingerprint-1-2", vec![0, 1]),
    ] {
        let det = mu_principal_det(g, &verts)?;
        checks.push(CheckOutcome::new(
            name,
            det == beta,
            format!("principal block determinant on {verts:?}"),
        ));
    }
    for (name, verts) in [
        ("gamma-divides-1-2-3-11-12", vec![0usize, 1, 2, 10, 11]),
        ("gamma-divides-5-6-13-14-15", vec![4, 5, 12, 13, 14]),
    ] {
        let det = mu_principal_det(g, &verts)?;
        checks.push(CheckOutcome::new(
            name,
            divides(&gamma, &det)?,
            format!("cubic factor divides the principal block determinant on {verts:?}"),
        ));
    }

    // Shared-minor gcd on the 17-vertex member: delete the path vertex row
    // against the path vertex column and against the first root's column.
    {
        let (g1, _) = path_family_pair(data, 1)?;
        let d_n_17 = mu_minor_det(&g1, 16, 16)?;
        let d_n_4 = mu_minor_det(&g1, 16, data.roots.0)?;
        let gcd = gcd_bipoly_t(&d_n_17, &d_n_4)?;
        let expect = &(&factor_alpha() * &beta) * &gamma;
        checks.push(CheckOutcome::new(
            "minor-gcd-alpha-beta-gamma",
            gcd == expect,
            "gcd of the two deleted-vertex minors of the 17-vertex member",
        ));
    }

    // Coalescence checks: attach small rooted graphs at every root choice.
    let attachments: Vec<(String, RootedGraph)> = {
        let mut list = Vec::new();
        for (label, base) in [
            ("P2", named::path(2)),
            ("P3", named::path(3)),
            ("P4", named::path(4)),
            ("K1-3", named::star(4)),
        ] {
            for r in 0..base.n() {
                list.push((
                    format!("coalesce-{label}-root{r}"),
                    RootedGraph::new(base.clone(), r).expect("root in range"),
                ));
            }
        }
        list
    };
    let outcomes = par::map_vec(attachments, |(name, base)| -> Result<CheckOutcome> {
        let (c1, c2) = mckay_pair(data, &base)?;
        let iso = are_isomorphic(&c1, &c2)?;
        let psi_equal = mu_polynomial(&c1)? == mu_polynomial(&c2)?;
        let a_equal = char_adjacency(&c1) == char_adjacency(&c2);
        let l_equal = char_laplacian(&c1) == char_laplacian(&c2);
        let q_equal = char_signless_laplacian(&c1) == char_signless_laplacian(&c2);
        let n_equal = char_normalized(&c1)? == char_normalized(&c2)?;
        let passed = !iso && psi_equal && a_equal && l_equal && q_equal && n_equal;
        Ok(CheckOutcome::new(
            &name,
            passed,
            format!(
                "non-isomorphic = {}, mu = {}, A = {}, L = {}, Q = {}, N = {}",
                !iso, psi_equal, a_equal, l_equal, q_equal, n_equal
            ),
        ))
    });
    for o in outcomes {
        checks.push(o?);
    }

    let all_passed = checks.iter().all(|c| c.passed);
    Ok(TreeValidationReport { checks, all_passed })
}

/// A frozen non-isomorphic degree-similar pair on 16 vertices with three
/// degree classes, the seed for the operation-vector generator.  Each member
/// is an 11-vertex base joined to a 5-cycle.  The bases differ only in the
/// edges between the switching cell {0, 1, 2, 3} and the six switched
/// vertices {4, ..., 9}; each switched vertex keeps exactly two cell
/// neighbors, so the switch preserves every degree and the switching matrix
/// certifies degree-similarity.  The joined 5-cycle {11, ..., 15} forms its
/// own degree class whose induced subgraph is 2-regular and stays 2-regular
/// under complement-inside, so one non-identity operation vector preserves
/// the degree partition.  The pair is re-verified by tests and
/// `validate-data`.
pub fn builtin_seed_pair() -> (Graph, Graph) {
    let g1 = Graph::with_edges(11, SEED_BASE_EDGES_A.as_slice()).expect("seed edges valid");
    let g2 = Graph::with_edges(11, SEED_BASE_EDGES_B.as_slice()).expect("seed edges valid");
    (join_with_five_cycle(&g1), join_with_five_cycle(&g2))
}

/// Joins a 5-cycle on fresh vertices to every vertex of `base`.
fn join_with_five_cycle(base: &Graph) -> Graph {
    let n = base.n();
    let mut g = Graph::empty(n + 5);
    for (u, v) in base.edges() {
        g.set_edge(u, v, true);
    }
    for i in 0..5 {
        g.set_edge(n + i, n + (i + 1) % 5, true);
        for v in 0..n {
            g.set_edge(v, n + i, true);
        }
    }
    g
}

const SEED_BASE_EDGES_A: [(usize, usize); 27] = [
    (0, 1),
    (0, 3),
    (0, 4),
    (0, 6),
    (0, 7),
    (0, 10),
    (1, 2),
    (1, 7),
    (1, 8),
    (1, 9),
    (1, 10),
    (2, 3),
    (2, 5),
    (2, 6),
    (2, 9),
    (2, 10),
    (3, 4),
    (3, 5),
    (3, 8),
    (3, 10),
    (4, 9),
    (4, 10),
    (5, 8),
    (5, 9),
    (6, 7),
    (6, 8),
    (7, 10),
];

const SEED_BASE_EDGES_B: [(usize, usize); 27] = [
    (0, 1),
    (0, 3),
    (0, 5),
    (0, 8),
    (0, 9),
    (0, 10),
    (1, 2),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 10),
    (2, 3),
    (2, 4),
    (2, 7),
    (2, 8),
    (2, 10),
    (3, 6),
    (3, 7),
    (3, 9),
    (3, 10),
    (4, 9),
    (4, 10),
    (5, 8),
    (5, 9),
    (6, 7),
    (6, 8),
    (7, 10),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::similarity::{degree_similar, DsOptions, DsVerdict};
    use rand::{seq::SliceRandom, Rng, SeedableRng};

    /// Searches for the frozen seed pair base: Godsil-McKay switching on a
    /// 4-vertex cell arranged so every vertex keeps its degree, which makes
    /// the switching matrix a degree-similarity witness.  Six switched
    /// vertices carrying all six half-pair neighborhoods block the cell
    /// permutation that undoes smaller switch sets, and the fixed skeleton
    /// (cell inducing C4, one vertex joined to the whole cell, switched set
    /// plus that vertex inducing a 2-regular graph) leaves exactly two
    /// degree classes so the 5-cycle joined on top becomes a third class.
    /// Run with --ignored --nocapture to reproduce; the result is frozen in
    /// SEED_BASE_EDGES_A / SEED_BASE_EDGES_B.
    #[test]
    #[ignore]
    fn search_for_seed_pair() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260823);
        let n = 11usize;
        let cell = [0usize, 1, 2, 3];
        let switched = [4usize, 5, 6, 7, 8, 9];
        let half_pairs: [(usize, usize); 6] = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];
        let mut stage = [0u64; 3];
        for attempt in 0u64..1_000_000 {
            if attempt % 5_000 == 4_999 {
                println!("attempt {attempt}: stages {stage:?}");
            }
            let mut g = Graph::empty(n);
            for &(u, v) in &[(0usize, 1usize), (1, 2), (2, 3), (0, 3)] {
                g.set_edge(u, v, true);
            }
            // Every half pair occurs exactly once, so each cell vertex sees
            // exactly three switched vertices.
            let mut assignment = half_pairs;
            assignment.shuffle(&mut rng);
            for (&s, &(u, v)) in switched.iter().zip(&assignment) {
                g.set_edge(u, s, true);
                g.set_edge(v, s, true);
            }
            // Vertex 10 sees the whole cell; together with a 2-regular graph
            // on {4..10} this makes the degree classes {6: cell + 10} and
            // {4: switched}.
            for &u in &cell {
                g.set_edge(u, 10, true);
            }
            let mut outside: Vec<usize> = (4..n).collect();
            outside.shuffle(&mut rng);
            let cycle_lengths: &[usize] = if rng.gen_bool(0.5) { &[7] } else { &[3, 4] };
            let mut at = 0usize;
            for &len in cycle_lengths {
                for i in 0..len {
                    g.set_edge(outside[at + i], outside[at + (i + 1) % len], true);
                }
                at += len;
            }
            let mut h = g.clone();
            for &s in &switched {
                for &u in &cell {
                    h.set_edge(u, s, !g.has_edge(u, s));
                }
            }
            debug_assert_eq!(g.degrees(), h.degrees(), "switch must preserve degrees");
            let pi = DegreePartition::of(&g);
            assert_eq!(pi.part_count(), 2, "skeleton fixes two degree classes");
            stage[0] += 1;
            if are_isomorphic(&g, &h).unwrap() {
                continue;
            }
            stage[1] += 1;
            if !matches!(
                degree_similar(&g, &h, &DsOptions::default()).verdict,
                DsVerdict::Yes
            ) {
                continue;
            }
            stage[2] += 1;
            let j1 = join_with_five_cycle(&g);
            let j2 = join_with_five_cycle(&h);
            let pi_joined = DegreePartition::of(&j1);
            if pi_joined.part_count() != 3
                || are_isomorphic(&j1, &j2).unwrap()
                || !matches!(
                    degree_similar(&j1, &j2, &DsOptions::default()).verdict,
                    DsVerdict::Yes
                )
            {
                continue;
            }
            println!("attempt {attempt}");
            println!(
                "joined degrees {:?} cells {:?}",
                pi_joined.degrees,
                pi_joined.cell_sizes()
            );
            println!("base A: {:?}", g.edges());
            println!("base B: {:?}", h.edges());
            return;
        }
        panic!("no seed pair found in budget");
    }

    #[test]
    fn op_vector_count_matches_formula() {
        assert_eq!(OpVector::count(1), Some(3));
        assert_eq!(OpVector::count(2), Some(27));
        assert_eq!(OpVector::count(3), Some(729));
        assert_eq!(OpVector::all_for(3).unwrap().len(), 729);
    }

    #[test]
    fn op_vector_index_round_trips() {
        for idx in 0..729u128 {
            let ops = OpVector::from_index(3, idx).unwrap();
            assert_eq!(ops.index(), idx, "index {idx} failed to round trip");
        }
        assert!(OpVector::from_index(3, 729).is_none());
        assert_eq!(OpVector::from_index(3, 0).unwrap(), OpVector::identity(3));
    }

    #[test]
    fn cell_pairs_are_lexicographic() {
        assert_eq!(cell_pairs(4), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(cell_pairs(1).is_empty());
    }

    #[test]
    fn apply_identity_keeps_the_graph() {
        let g = named::petersen().delete_edge(0, 1).unwrap();
        let pi = DegreePartition::of(&g);
        let t = pi.part_count();
        let h = apply_op_vector(&g, &pi, &OpVector::identity(t)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn apply_all_empty_clears_every_edge() {
        let g = named::petersen().delete_edge(0, 1).unwrap();
        let pi = DegreePartition::of(&g);
        let t = pi.part_count();
        let ops = OpVector {
            part_ops: vec![PartOp::EmptyInside; t],
            pair_ops: vec![PairOp::BipEmpty; t * (t - 1) / 2],
        };
        let h = apply_op_vector(&g, &pi, &ops).unwrap();
        assert_eq!(h.num_edges(), 0);
    }

    #[test]
    fn apply_rejects_foreign_partition() {
        let g = named::path(4);
        let pi = DegreePartition::of(&named::complete(4));
        let err = apply_op_vector(&g, &pi, &OpVector::identity(1)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn complement_inside_on_half_regular_cell_preserves_degrees() {
        // C5 joined to an apex: the five cycle vertices induce C5, which is
        // 2-regular with 2 = (5 - 1) / 2, so complementing inside keeps the
        // degree partition.
        let mut g = named::cycle(5);
        let n = g.n();
        let mut h = Graph::empty(n + 1);
        for (u, v) in g.edges() {
            h.set_edge(u, v, true);
        }
        for v in 0..n {
            h.set_edge(n, v, true);
        }
        g = h;
        let pi = DegreePartition::of(&g);
        assert_eq!(pi.part_count(), 2);
        let apex_cell = pi.cells[0].clone();
        assert_eq!(apex_cell, vec![5], "apex has the top degree");
        let ops = OpVector {
            part_ops: vec![PartOp::Keep, PartOp::ComplementInside],
            pair_ops: vec![PairOp::Keep],
        };
        assert!(degree_preserving(&pi, &g, &ops).unwrap());
        // Complementing inside a triangle is not degree preserving.
        let k3_cell = {
            let mut g = named::complete(3);
            for _ in 0..2 {
                g = g.add_pendant(0);
            }
            g
        };
        let pi2 = DegreePartition::of(&k3_cell);
        let t2 = pi2.part_count();
        let mut ops2 = OpVector::identity(t2);
        let k3_part = pi2
            .cells
            .iter()
            .position(|c| c.len() == 2 && c.contains(&1))
            .map(|_| 0);
        // The triangle vertices 1 and 2 have degree 2; find their cell.
        let cell_idx = pi2
            .cells
            .iter()
            .position(|c| c.contains(&1) && c.contains(&2))
            .unwrap();
        let _ = k3_part;
        ops2.part_ops[cell_idx] = PartOp::ComplementInside;
        assert!(!degree_preserving(&pi2, &k3_cell, &ops2).unwrap());
    }

    #[test]
    fn builtin_tree_has_the_advertised_shape() {
        let data = TreeTData::builtin();
        let g = &data.graph;
        assert_eq!(g.n(), 16);
        assert_eq!(g.num_edges(), 15);
        assert!(g.is_connected());
        let mut seq = g.degree_sequence();
        seq.sort_unstable();
        assert_eq!(seq, vec![1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3]);
        assert_eq!(g.degree(data.roots.0), 2);
        assert_eq!(g.degree(data.roots.1), 2);
    }

    #[test]
    fn tree_data_text_round_trips() {
        let data = TreeTData::builtin();
        let text = data.to_text();
        let back = TreeTData::from_text(&text).unwrap();
        assert_eq!(back.graph, data.graph);
        assert_eq!(back.roots, data.roots);
        assert!(TreeTData::from_text("3\n0 1\n1 2\n").is_err(), "missing roots line");
    }

    #[test]
    fn beta_fingerprints_hold_on_the_builtin_tree() {
        let data = TreeTData::builtin();
        let beta = factor_beta();
        for verts in [[10usize, 11], [13, 14], [0, 1]] {
            assert_eq!(
                mu_principal_det(&data.graph, &verts).unwrap(),
                beta,
                "2x2 principal block on {verts:?} must be the quadratic factor"
            );
        }
    }

    #[test]
    fn minor_gcd_is_alpha_beta_gamma() {
        let data = TreeTData::builtin();
        let (g1, _) = path_family_pair(&data, 1).unwrap();
        let d17 = mu_minor_det(&g1, 16, 16).unwrap();
        let d4 = mu_minor_det(&g1, 16, 3).unwrap();
        let gcd = gcd_bipoly_t(&d17, &d4).unwrap();
        let expect = &(&factor_alpha() * &factor_beta()) * &factor_gamma();
        assert_eq!(gcd, expect);
    }

    #[test]
    fn mckay_pair_rejects_trivial_base() {
        let data = TreeTData::builtin();
        let base = RootedGraph::new(named::path(1), 0).unwrap();
        assert!(matches!(
            mckay_pair(&data, &base),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn mckay_pair_on_p2_is_cospectral_not_isomorphic() {
        let data = TreeTData::builtin();
        let (g1, g2) = mckay_pair(&data, &path_base(1)).unwrap();
        assert_eq!(g1.n(), 17);
        assert_eq!(g2.n(), 17);
        assert!(!are_isomorphic(&g1, &g2).unwrap());
        assert_eq!(
            mu_polynomial(&g1).unwrap(),
            mu_polynomial(&g2).unwrap(),
            "coalescences at the two roots must share the mu polynomial"
        );
    }

    #[test]
    fn mckay_pair_star_center_is_cospectral_not_isomorphic() {
        let data = TreeTData::builtin();
        let base = RootedGraph::new(named::star(4), 0).unwrap();
        let (g1, g2) = mckay_pair(&data, &base).unwrap();
        assert!(!are_isomorphic(&g1, &g2).unwrap());
        assert_eq!(mu_polynomial(&g1).unwrap(), mu_polynomial(&g2).unwrap());
    }

    #[test]
    fn random_roots_fail_validation() {
        // A path with endpoint roots is a tree of the right size whose
        // coalescences at the two roots are isomorphic, so validation must
        // reject it.
        let data = TreeTData {
            graph: named::path(16),
            roots: (0, 15),
        };
        let report = validate_tree_t(&data).unwrap();
        assert!(!report.all_passed);
        assert!(report
            .failed_checks()
            .iter()
            .any(|c| c.name.starts_with("coalesce-")));
    }

    #[test]
    fn seed_pair_is_degree_similar_with_three_cells() {
        let (g1, g2) = builtin_seed_pair();
        assert!(g1.is_connected(), "first member must be connected");
        assert!(!are_isomorphic(&g1, &g2).unwrap());
        let pi = DegreePartition::of(&g1);
        assert_eq!(pi.part_count(), 3);
        assert_eq!(DegreePartition::of(&g2), pi);
        let decision = degree_similar(&g1, &g2, &DsOptions::default());
        assert!(
            matches!(decision.verdict, DsVerdict::Yes),
            "seed pair must be verified degree-similar, got {:?}",
            decision.verdict
        );
    }

    /// The 5-cycle cell of the seed pair admits a non-identity
    /// degree-preserving operation: complementing inside a 5-cycle is again
    /// 2-regular.
    #[test]
    fn seed_pair_has_nontrivial_degree_preserving_op() {
        let (g1, g2) = builtin_seed_pair();
        let pi = DegreePartition::of(&g1);
        let five_cell = pi
            .cells
            .iter()
            .position(|c| c.len() == 5 && !c.contains(&10))
            .expect("5-cycle cell present");
        let mut ops = OpVector::identity(pi.part_count());
        ops.part_ops[five_cell] = PartOp::ComplementInside;
        assert!(degree_preserving(&pi, &g1, &ops).unwrap());
        assert!(degree_preserving(&pi, &g2, &ops).unwrap());
        let (h1, h2) = apply_op_vector_pair(&g1, &g2, &pi, &ops).unwrap();
        assert_ne!(h1.edges(), g1.edges(), "output differs as a labeled graph");
        let decision = degree_similar(&h1, &h2, &DsOptions::default());
        assert!(matches!(decision.verdict, DsVerdict::Yes));
    }
}
