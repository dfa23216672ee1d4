//! Constructors for the named graphs used throughout: complete graphs,
//! paths, cycles, stars, the Petersen graph, the Shrikhande graph, the
//! 4 x 4 rook's graph, and the Paley graph on 25 vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v, true);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.set_edge(i - 1, i, true);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut g = path(n);
    g.set_edge(n - 1, 0, true);
    g
}

/// Star K_{1,k}: vertex 0 is the centre.
pub fn star(k: usize) -> Graph {
    let mut g = Graph::empty(k + 1);
    for leaf in 1..=k {
        g.set_edge(0, leaf, true);
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.set_edge(u, v, true);
        }
    }
    g
}

/// Petersen graph: outer C5 on 0..5, inner pentagram on 5..10, spokes i to
/// i + 5.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.set_edge(i, (i + 1) % 5, true);
        g.set_edge(5 + i, 5 + (i + 2) % 5, true);
        g.set_edge(i, 5 + i, true);
    }
    g
}

/// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
/// {(1,0), (3,0), (0,1), (0,3), (1,1), (3,3)}.  Vertex (a, b) is 4a + b.
pub fn shrikhande() -> Graph {
    let mut g = Graph::empty(16);
    let gens = [(1i32, 0i32), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    for a in 0..4i32 {
        for b in 0..4i32 {
            for (da, db) in gens {
                let (c, d) = ((a + da).rem_euclid(4), (b + db).rem_euclid(4));
                g.set_edge((4 * a + b) as usize, (4 * c + d) as usize, true);
            }
        }
    }
    g
}

/// 4 x 4 rook's graph K4 x K4: cell (r, c) is 4r + c, adjacent when the
/// row or the column agrees.
pub fn rook4() -> Graph {
    let mut g = Graph::empty(16);
    for r in 0..4 {
        for c in 0..4 {
            for c2 in c + 1..4 {
                g.set_edge(4 * r + c, 4 * r + c2, true);
            }
            for r2 in r + 1..4 {
                g.set_edge(4 * r + c, 4 * r2 + c, true);
            }
        }
    }
    g
}

/// Paley graph on GF(25) = Z5[x]/(x^2 - 2); vertices a + b x are 5a + b,
/// adjacent when their difference is a nonzero square.  2 is a quadratic
/// non-residue mod 5, so x^2 - 2 is irreducible, and -1 is a square in
/// GF(25), making the relation symmetric.
pub fn paley25() -> Graph {
    let idx = |a: i32, b: i32| (5 * a.rem_euclid(5) + b.rem_euclid(5)) as usize;
    let mut is_square = [false; 25];
    for a in 0..5i32 {
        for b in 0..5i32 {
            if a == 0 && b == 0 {
                continue;
            }
            // (a + b x)^2 = a^2 + 2 b^2 + 2 a b x.
            is_square[idx(a * a + 2 * b * b, 2 * a * b)] = true;
        }
    }
    let mut g = Graph::empty(25);
    for a1 in 0..5i32 {
        for b1 in 0..5i32 {
            for a2 in 0..5i32 {
                for b2 in 0..5i32 {
                    let (u, v) = (idx(a1, b1), idx(a2, b2));
                    if u < v && is_square[idx(a1 - a2, b1 - b2)] {
                        g.set_edge(u, v, true);
                    }
                }
            }
        }
    }
    g
}

/// Resolves names like `K5`, `P4`, `C6`, `K3,4`, `star5`, `petersen`,
/// `shrikhande`, `rook4`, `paley25`.
pub fn from_name(name: &str) -> Result<Graph> {
    let name = name.trim();
    let bad = || Error::InvalidInput(format!("unknown graph name {name:?}"));
    match name.to_ascii_lowercase().as_str() {
        "petersen" => return Ok(petersen()),
        "shrikhande" => return Ok(shrikhande()),
        "rook4" => return Ok(rook4()),
        "paley25" => return Ok(paley25()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("star") {
        return rest.parse().map(star).map_err(|_| bad());
    }
    let (head, rest) = name.split_at(1);
    match head {
        "K" | "k" => {
            if let Some((a, b)) = rest.split_once(',') {
                let a = a.parse().map_err(|_| bad())?;
                let b = b.parse().map_err(|_| bad())?;
                Ok(complete_bipartite(a, b))
            } else {
                rest.parse().map(complete).map_err(|_| bad())
            }
        }
        "P" | "p" => rest.parse().map(path).map_err(|_| bad()),
        "C" | "c" => {
            let n: usize = rest.parse().map_err(|_| bad())?;
            if n < 3 {
                return Err(Error::InvalidInput(format!(
                    "cycle C{n} needs at least 3 vertices"
                )));
            }
            Ok(cycle(n))
        }
        _ => Err(bad()),
    }
}
