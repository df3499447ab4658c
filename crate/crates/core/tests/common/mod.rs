//! Shared random-digraph generators for the property suites. Seeded
//! ChaCha keeps every suite deterministic.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rankability::{Digraph, Matrix};

/// Random digraph: each off-diagonal edge present with probability
/// `p_edge`, weights uniform in [lo, hi].
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p_edge: f64, lo: f64, hi: f64) -> Digraph {
    let mut w = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen::<f64>() < p_edge {
                w[(i, j)] = lo + (hi - lo) * rng.gen::<f64>();
            }
        }
    }
    Digraph::from_weights(w).expect("generated weights are valid")
}

/// Random acyclic digraph: forward edges of a random vertex order,
/// weights uniform in [0, 1].
pub fn random_acyclic(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut w = Matrix::zeros(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen::<f64>() < 0.5 {
                w[(order[a], order[b])] = rng.gen::<f64>();
            }
        }
    }
    Digraph::from_weights(w).expect("generated weights are valid")
}

/// Random digraph guaranteed cyclic: a general random graph with a planted
/// three-cycle whose weights stay well away from zero.
pub fn random_cyclic(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    assert!(n >= 3);
    let mut g = random_digraph(rng, n, 0.35, 0.0, 1.0);
    let mut verts: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        verts.swap(i, j);
    }
    let (a, b, c) = (verts[0], verts[1], verts[2]);
    let mut w = g.weights().clone();
    for (u, v) in [(a, b), (b, c), (c, a)] {
        w[(u, v)] = 0.25 + 0.75 * rng.gen::<f64>();
    }
    g = Digraph::from_weights(w).expect("generated weights are valid");
    g
}
