//! Canonical labelling by equitable partition refinement with
//! individualization and backtracking.  The canonical form of a graph is
//! the relabelling with the lexicographically smallest upper-triangle
//! adjacency bitstring among all leaves of the search tree; two graphs are
//! isomorphic exactly when their canonical certificates agree.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use std::collections::BTreeMap;

/// Backtracking bound; canonical labelling refuses larger graphs.
pub const MAX_CANON_VERTICES: usize = 64;

/// Splits cells by neighbour-count signatures against all current cells
/// until the partition is equitable.  Sub-cells are ordered by signature,
/// so the result is independent of input vertex order within cells.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut changed = false;
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig = vec![0u32; cells.len()];
                for u in g.neighbors(v) {
                    sig[cell_of[u]] += 1;
                }
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// True when u and v have identical neighbourhoods away from each other.
/// Swapping such vertices is an automorphism, so only one needs trying.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.n())
        .filter(|&w| w != u && w != v)
        .all(|w| g.has_edge(u, w) == g.has_edge(v, w))
}

/// Upper-triangle bits of the relabelled graph packed most significant
/// first, so Vec comparison is bit-lexicographic comparison.
fn bitstring(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut words = Vec::new();
    let mut acc = 0u64;
    let mut used = 0u32;
    for i in 0..n {
        for j in i + 1..n {
            acc = (acc << 1) | u64::from(g.has_edge(order[i], order[j]));
            used += 1;
            if used == 64 {
                words.push(acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        words.push(acc << (64 - used));
    }
    words
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bits = bitstring(g, &order);
            let better = match best {
                None => true,
                Some((b, _)) => bits < *b,
            };
            if better {
                *best = Some((bits, order));
            }
        }
        Some(target) => {
            let cell = &cells[target];
            let mut tried: Vec<usize> = Vec::new();
            for &v in cell {
                if tried.iter().any(|&u| twins(g, u, v)) {
                    continue;
                }
                tried.push(v);
                let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
                for (i, c) in cells.iter().enumerate() {
                    if i == target {
                        child.push(vec![v]);
                        child.push(c.iter().copied().filter(|&w| w != v).collect());
                    } else {
                        child.push(c.clone());
                    }
                }
                search(g, child, best);
            }
        }
    }
}

/// Relabelling of g with the minimal adjacency bitstring.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge(format!(
            "canonical labelling supports at most {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(g.clone());
    }
    // Initial cells: vertices grouped by degree, larger degrees first.
    let degs = g.degrees();
    let mut by_degree: BTreeMap<std::cmp::Reverse<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree
            .entry(std::cmp::Reverse(degs[v]))
            .or_default()
            .push(v);
    }
    let cells: Vec<Vec<usize>> = by_degree.into_values().collect();
    let mut best = None;
    search(g, cells, &mut best);
    let (_, order) = best.expect("search always yields a leaf");
    let mut perm = vec![0usize; n];
    for (pos, &old) in order.iter().enumerate() {
        perm[old] = pos;
    }
    Ok(g.relabel(&perm))
}

/// Canonical certificate: graph6 of the canonical form.  Equal strings
/// exactly characterize isomorphic graphs within the size bound.
pub fn canonical_cert(g: &Graph) -> Result<String> {
    Ok(to_graph6(&canonical_form(g)?))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n()
        || a.num_edges() != b.num_edges()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn relabelled_graphs_share_certificates() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in [5usize, 8, 12] {
            for _ in 0..5 {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(0.5) {
                            g.set_edge(u, v, true);
                        }
                    }
                }
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let h = g.relabel(&perm);
                assert_eq!(
                    canonical_cert(&g).unwrap(),
                    canonical_cert(&h).unwrap(),
                    "certificate changed under relabelling at n={n}"
                );
            }
        }
    }

    #[test]
    fn regular_non_isomorphic_pairs_are_separated() {
        // C6 and 2 C3 are both 2-regular on 6 vertices.
        let c6 = named::cycle(6);
        let two_triangles = named::cycle(3).disjoint_union(&named::cycle(3));
        assert!(!are_isomorphic(&c6, &two_triangles).unwrap());
        // Shrikhande and the rook's graph share all degree data.
        assert!(!are_isomorphic(&named::shrikhande(), &named::rook4()).unwrap());
    }

    #[test]
    fn petersen_is_recognised_up_to_relabelling() {
        let g = named::petersen();
        let perm: Vec<usize> = vec![3, 8, 1, 9, 4, 0, 7, 2, 6, 5];
        assert!(are_isomorphic(&g, &g.relabel(&perm)).unwrap());
    }

    #[test]
    fn extreme_automorphism_groups_stay_fast() {
        // K10 and its complement force heavy twin pruning.
        let k10 = named::complete(10);
        assert_eq!(canonical_form(&k10).unwrap(), k10);
        let e10 = Graph::empty(10);
        assert_eq!(canonical_form(&e10).unwrap(), e10);
    }

    #[test]
    fn vertex_transitive_graphs_complete() {
        let g = named::paley25();
        let cert = canonical_cert(&g).unwrap();
        let perm: Vec<usize> = (0..25).map(|v| (v * 7 + 3) % 25).collect();
        assert_eq!(cert, canonical_cert(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn oversized_inputs_are_refused() {
        let g = Graph::empty(65);
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge(_))));
    }
}
