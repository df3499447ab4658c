//! Named structured digraphs used throughout the tests and shipped with
//! the CLI: the eight six-vertex rankability benchmarks and the two
//! eight-team conference tournaments. Edge lists are frozen here so golden
//! tests are self-contained.
//!
//! Vertices are 0-based; the conventional 1-based vertex v of the source
//! figures is vertex v-1 here.

use crate::digraph::Digraph;
use crate::rankability::dominance_graph;

fn binary(n: usize, edges: &[(usize, usize)]) -> Digraph {
    Digraph::from_binary_edges(n, edges).expect("frozen edge list is valid")
}

/// Acyclic tournament on six vertices; the perfectly rankable benchmark.
pub fn complete_dominance() -> Digraph {
    dominance_graph(6, None).expect("n = 6 is valid")
}

/// Complete dominance with edge (2,3) removed and back edge (3,1) added
/// (1-based), which introduces a single two-cycle.
pub fn perturbed_dominance() -> Digraph {
    binary(
        6,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
            (1, 3), (1, 4), (1, 5),
            (2, 0), (2, 3), (2, 4), (2, 5),
            (3, 4), (3, 5),
            (4, 5),
        ],
    )
}

/// The random benchmark plus edges (4,2) and (6,1) (1-based), an example
/// of edge changes that improve rankability.
pub fn perturbed_random_c() -> Digraph {
    binary(
        6,
        &[
            (0, 1), (0, 2), (0, 5),
            (1, 3), (1, 4),
            (3, 0), (3, 1), (3, 5),
            (4, 0), (4, 1),
            (5, 0), (5, 1), (5, 2), (5, 4),
        ],
    )
}

/// Two weakly linked clusters.
pub fn nearly_disconnected() -> Digraph {
    binary(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (3, 5), (4, 5)])
}

/// A random-looking digraph with several cycles.
pub fn random() -> Digraph {
    binary(
        6,
        &[
            (0, 1), (0, 2), (0, 5),
            (1, 3), (1, 4),
            (3, 0), (3, 5),
            (4, 0), (4, 1),
            (5, 1), (5, 2), (5, 4),
        ],
    )
}

/// The directed six-cycle.
pub fn cycle() -> Digraph {
    binary(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
}

/// Every ordered pair connected: maximally conflicted data.
pub fn completely_connected() -> Digraph {
    let edges: Vec<(usize, usize)> = (0..6)
        .flat_map(|i| (0..6).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    binary(6, &edges)
}

/// Six vertices, no comparisons at all.
pub fn empty() -> Digraph {
    Digraph::empty(6).expect("n = 6 is valid")
}

/// The eight benchmarks in decreasing order of spectral rankability,
/// with their conventional names.
pub fn all_benchmarks() -> Vec<(&'static str, Digraph)> {
    vec![
        ("complete_dominance", complete_dominance()),
        ("perturbed_dominance", perturbed_dominance()),
        ("perturbed_random_c", perturbed_random_c()),
        ("nearly_disconnected", nearly_disconnected()),
        ("random", random()),
        ("cycle", cycle()),
        ("completely_connected", completely_connected()),
        ("empty", empty()),
    ]
}

/// Big East 2001 season results as a binary digraph; vertices are teams
/// ordered by final rating. A full tournament with exactly one cycle
/// (between the 3rd, 5th and 4th ranked teams).
pub fn big_east_2001() -> Digraph {
    binary(
        8,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7),
            (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
            (2, 4), (2, 5), (2, 6), (2, 7),
            (3, 2), (3, 5), (3, 6), (3, 7),
            (4, 3), (4, 5), (4, 6), (4, 7),
            (5, 6), (5, 7),
            (6, 7),
        ],
    )
}

/// Big East 2007 season results as a binary digraph; a full tournament
/// with 205 simple cycles.
pub fn big_east_2007() -> Digraph {
    binary(
        8,
        &[
            (0, 1), (0, 2), (0, 4), (0, 5), (0, 7),
            (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
            (2, 1), (2, 3), (2, 4), (2, 7),
            (3, 0), (3, 5), (3, 6), (3, 7),
            (4, 3), (4, 6), (4, 7),
            (5, 2), (5, 4), (5, 6),
            (6, 0), (6, 2), (6, 7),
            (7, 5),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts() {
        assert_eq!(count(&complete_dominance()), 15);
        assert_eq!(count(&perturbed_dominance()), 15);
        assert_eq!(count(&perturbed_random_c()), 14);
        assert_eq!(count(&nearly_disconnected()), 7);
        assert_eq!(count(&random()), 12);
        assert_eq!(count(&cycle()), 6);
        assert_eq!(count(&completely_connected()), 30);
        assert_eq!(count(&empty()), 0);
        assert_eq!(count(&big_east_2001()), 28);
        assert_eq!(count(&big_east_2007()), 28);
    }

    #[test]
    fn perturbed_random_c_extends_random() {
        let r = random();
        let c = perturbed_random_c();
        for i in 0..6 {
            for j in 0..6 {
                if r.weight(i, j) > 0.0 {
                    assert_eq!(c.weight(i, j), 1.0);
                }
            }
        }
        assert_eq!(c.weight(3, 1), 1.0);
        assert_eq!(c.weight(5, 0), 1.0);
        assert_eq!(count(&c), count(&r) + 2);
    }

    #[test]
    fn big_east_graphs_are_tournaments() {
        for g in [big_east_2001(), big_east_2007()] {
            for i in 0..8 {
                for j in i + 1..8 {
                    let forward = g.weight(i, j) > 0.0;
                    let backward = g.weight(j, i) > 0.0;
                    assert!(forward ^ backward, "pair ({i},{j}) not oriented exactly once");
                }
            }
        }
    }

    fn count(g: &Digraph) -> usize {
        let n = g.n();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| g.weight(i, j) > 0.0)
            .count()
    }
}
