//! Simple undirected graphs on labelled vertices 0..n, stored as a dense
//! symmetric adjacency table, plus the degree partition and the rooted
//! wrapper used by the coalescence constructions.

use crate::algebra::{det_integer, IntMat, Mat};
use crate::error::{Error, Result};
use num::{BigInt, One, Zero};
use serde::Serialize;
use std::collections::VecDeque;

/// Undirected graph without loops or multi-edges.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u} rejected")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v, "loops are not representable");
        self.adj[u * self.n + v] = present;
        self.adj[v * self.n + u] = present;
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degree sequence in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn adjacency_matrix(&self) -> IntMat {
        Mat::from_fn(self.n, self.n, |r, c| {
            if self.has_edge(r, c) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn degree_matrix(&self) -> IntMat {
        let d = self.degrees();
        Mat::from_fn(self.n, self.n, |r, c| {
            if r == c {
                BigInt::from(d[r])
            } else {
                BigInt::zero()
            }
        })
    }

    /// Combinatorial Laplacian D - A.
    pub fn laplacian(&self) -> IntMat {
        let d = self.degrees();
        Mat::from_fn(self.n, self.n, |r, c| {
            if r == c {
                BigInt::from(d[r])
            } else if self.has_edge(r, c) {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Signless Laplacian D + A.
    pub fn signless_laplacian(&self) -> IntMat {
        let d = self.degrees();
        Mat::from_fn(self.n, self.n, |r, c| {
            if r == c {
                BigInt::from(d[r])
            } else if self.has_edge(r, c) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                g.set_edge(u, v, !self.has_edge(u, v));
            }
        }
        g
    }

    /// Subgraph induced on `verts`; vertex i of the result is verts[i].
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Image under a relabelling; perm[old] = new.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::InvalidInput(format!("({u}, {v}) is not an edge")));
        }
        let mut g = self.clone();
        g.set_edge(u, v, false);
        Ok(g)
    }

    /// New graph with one extra vertex (label n) attached to `v`.
    pub fn add_pendant(&self, v: usize) -> Graph {
        assert!(v < self.n);
        let mut g = Graph::empty(self.n + 1);
        for (a, b) in self.edges() {
            g.set_edge(a, b, true);
        }
        g.set_edge(v, self.n, true);
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v, true);
        }
        g
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Number of connected components that admit a proper 2-colouring.
    pub fn bipartite_component_count(&self) -> usize {
        let mut count = 0;
        for comp in self.components() {
            let mut colour = vec![None; self.n];
            colour[comp[0]] = Some(false);
            let mut queue = VecDeque::from([comp[0]]);
            let mut ok = true;
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!colour[u].unwrap());
                            queue.push_back(v);
                        }
                        Some(c) => {
                            if c == colour[u].unwrap() {
                                ok = false;
                            }
                        }
                    }
                }
            }
            if ok {
                count += 1;
            }
        }
        count
    }

    /// Length of a shortest cycle; None for forests.  Breadth-first search
    /// from every root; the minimum over roots is exact because a root on a
    /// shortest cycle cannot be shortcut without a shorter cycle existing.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cycle = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Connected with exactly one cycle, i.e. connected and |E| = |V|.
    pub fn is_unicyclic(&self) -> bool {
        self.n > 0 && self.is_connected() && self.num_edges() == self.n
    }

    /// Matrix-tree count: any cofactor of the Laplacian.
    pub fn spanning_tree_count(&self) -> BigInt {
        if self.n == 0 {
            return BigInt::zero();
        }
        if self.n == 1 {
            return BigInt::one();
        }
        let l = self.laplacian();
        det_integer(&l.minor_matrix(0, 0))
    }

    /// trace(A^k) for k = 1..=max_len.
    pub fn closed_walk_counts(&self, max_len: usize) -> Vec<BigInt> {
        let a = self.adjacency_matrix();
        let mut power = a.clone();
        let mut out = Vec::with_capacity(max_len);
        for k in 1..=max_len {
            let mut tr = BigInt::zero();
            for i in 0..self.n {
                tr += &power[(i, i)];
            }
            out.push(tr);
            if k < max_len {
                power = crate::algebra::mat_mul(&power, &a);
            }
        }
        out
    }

    pub fn isolated_vertex_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            vertices: self.n,
            edges: self.num_edges(),
            isolated_vertices: self.isolated_vertex_count(),
            components: self.components().len(),
            bipartite_components: self.bipartite_component_count(),
            girth: self.girth(),
            degree_sequence: self.degree_sequence(),
            spanning_trees: self.spanning_tree_count().to_string(),
            closed_walks: self
                .closed_walk_counts(6)
                .iter()
                .map(|w| w.to_string())
                .collect(),
        }
    }
}

/// Structural summary used by the command-line `invariants` report.
#[derive(Clone, Debug, Serialize)]
pub struct Invariants {
    pub vertices: usize,
    pub edges: usize,
    pub isolated_vertices: usize,
    pub components: usize,
    pub bipartite_components: usize,
    pub girth: Option<usize>,
    pub degree_sequence: Vec<usize>,
    pub spanning_trees: String,
    pub closed_walks: Vec<String>,
}

/// Vertices grouped by degree, cells ordered by decreasing degree.  Two
/// graphs can only be degree-similar when their partitions match, and any
/// conjugating matrix is block diagonal along these cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreePartition {
    /// Distinct degrees, decreasing.
    pub degrees: Vec<usize>,
    /// cells[i] lists the vertices of degree degrees[i], ascending.
    pub cells: Vec<Vec<usize>>,
}

impl DegreePartition {
    pub fn of(g: &Graph) -> Self {
        let degs = g.degrees();
        let mut distinct: Vec<usize> = degs.clone();
        distinct.sort_unstable_by(|a, b| b.cmp(a));
        distinct.dedup();
        let cells = distinct
            .iter()
            .map(|&d| (0..g.n()).filter(|&v| degs[v] == d).collect())
            .collect();
        DegreePartition {
            degrees: distinct,
            cells,
        }
    }

    pub fn part_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Same degrees with the same multiplicities.
    pub fn matches(&self, other: &DegreePartition) -> bool {
        self.degrees == other.degrees && self.cell_sizes() == other.cell_sizes()
    }

    /// Concatenation of the cells: position p of the blocked order holds
    /// original vertex permutation()[p].
    pub fn permutation(&self) -> Vec<usize> {
        self.cells.iter().flatten().copied().collect()
    }
}

/// Graph with a distinguished vertex, the attachment point for coalescence.
#[derive(Clone, Debug)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if root >= graph.n() {
            return Err(Error::InvalidInput(format!(
                "root {root} out of range for {} vertices",
                graph.n()
            )));
        }
        Ok(RootedGraph { graph, root })
    }
}

/// Identifies the roots of the two graphs.  Vertices of `a` keep their
/// labels; non-root vertices of `b` follow in ascending order.
pub fn coalesce(a: &RootedGraph, b: &RootedGraph) -> Graph {
    let na = a.graph.n();
    let mut map_b = Vec::with_capacity(b.graph.n());
    let mut next = na;
    for v in 0..b.graph.n() {
        if v == b.root {
            map_b.push(a.root);
        } else {
            map_b.push(next);
            next += 1;
        }
    }
    let mut g = Graph::empty(na + b.graph.n() - 1);
    for (u, v) in a.graph.edges() {
        g.set_edge(u, v, true);
    }
    for (u, v) in b.graph.edges() {
        g.set_edge(map_b[u], map_b[v], true);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::with_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((n - 1, 0));
        Graph::with_edges(n, &e).unwrap()
    }

    #[test]
    fn edge_bookkeeping_is_symmetric() {
        let g = Graph::with_edges(4, &[(0, 1), (2, 1)]).unwrap();
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1), "symmetry broken");
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.degrees(), vec![1, 2, 1, 0]);
        assert_eq!(g.isolated_vertex_count(), 1);
    }

    #[test]
    fn with_edges_rejects_loops_and_out_of_range() {
        assert!(Graph::with_edges(3, &[(0, 0)]).is_err(), "loop accepted");
        assert!(Graph::with_edges(3, &[(0, 3)]).is_err(), "range ignored");
    }

    #[test]
    fn complement_of_path_has_expected_edges() {
        let g = path(4).complement();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::with_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(!g.is_connected());
        assert!(path(5).is_connected());
    }

    #[test]
    fn girth_detects_shortest_cycle() {
        assert_eq!(path(6).girth(), None, "paths are acyclic");
        assert_eq!(cycle(5).girth(), Some(5));
        let mut g = cycle(6);
        g.set_edge(0, 3, true);
        assert_eq!(g.girth(), Some(4), "chord shortens the cycle");
        let k4 = Graph::with_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Some(3));
    }

    #[test]
    fn bipartite_component_count_sees_odd_cycles() {
        let g = cycle(5).disjoint_union(&cycle(4)).disjoint_union(&path(3));
        assert_eq!(g.bipartite_component_count(), 2, "C5 is not bipartite");
    }

    #[test]
    fn spanning_trees_match_cayley_and_cycle_counts() {
        // K4 has 4^{4-2} = 16 spanning trees, C5 has 5, P4 has 1.
        let k4 = Graph::with_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.spanning_tree_count(), BigInt::from(16));
        assert_eq!(cycle(5).spanning_tree_count(), BigInt::from(5));
        assert_eq!(path(4).spanning_tree_count(), BigInt::from(1));
    }

    #[test]
    fn closed_walks_on_triangle() {
        let c3 = cycle(3);
        // trace(A^k) for C3: 0, 6, 6, 18, 30, 66.
        let w = c3.closed_walk_counts(6);
        let expect: Vec<BigInt> = [0, 6, 6, 18, 30, 66].map(BigInt::from).to_vec();
        assert_eq!(w, expect);
    }

    #[test]
    fn degree_partition_orders_cells_by_decreasing_degree() {
        let g = Graph::with_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap();
        let p = DegreePartition::of(&g);
        assert_eq!(p.degrees, vec![3, 2, 1, 0]);
        assert_eq!(p.cells, vec![vec![1], vec![2, 3], vec![0], vec![4]]);
        assert_eq!(p.permutation(), vec![1, 2, 3, 0, 4]);
    }

    #[test]
    fn degree_partition_matching_requires_equal_multiplicities() {
        let p1 = DegreePartition::of(&path(4));
        let p2 = DegreePartition::of(&path(4).relabel(&[3, 1, 0, 2]));
        assert!(p1.matches(&p2));
        let p3 = DegreePartition::of(&cycle(4));
        assert!(!p1.matches(&p3), "different degree sets must not match");
    }

    #[test]
    fn coalescence_identifies_roots() {
        // P3 rooted at its middle joined with P2 gives the star K(1,3).
        let a = RootedGraph::new(path(3), 1).unwrap();
        let b = RootedGraph::new(path(2), 0).unwrap();
        let g = coalesce(&a, &b);
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree_sequence(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn relabel_round_trips_through_inverse() {
        let g = Graph::with_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let perm = vec![2, 0, 4, 1, 3];
        let mut inv = vec![0; 5];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        assert_eq!(g.relabel(&perm).relabel(&inv), g);
    }

    #[test]
    fn induced_subgraph_keeps_listed_order() {
        let g = cycle(5);
        let h = g.induced(&[1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1)], "only the 1-2 edge survives");
    }

    #[test]
    fn unicyclic_requires_connected_and_equal_counts() {
        assert!(cycle(4).is_unicyclic());
        assert!(!path(4).is_unicyclic());
        let two = cycle(3).disjoint_union(&cycle(3));
        assert!(!two.is_unicyclic(), "disjoint cycles are not unicyclic");
    }
}
