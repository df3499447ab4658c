//! Rankability measures: the spectral-degree measure over Hausdorff
//! distances to the ideal dominance spectrum, and an exact edge-change
//! measure computed by exhaustive permutation search on small graphs.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::spectral::{hausdorff, Spectrum};

/// Default vertex cap for the exhaustive edge-change search (9! = 362,880
/// permutations scanned in well under a second).
pub const DEFAULT_EDGE_SEARCH_CAP: usize = 9;

/// How many optimal orderings to retain in [`EdgeRankabilityResult`].
pub const OPTIMAL_ORDER_CAP: usize = 10;

/// Spectral-degree rankability of a digraph, with the Hausdorff components
/// reported separately so a regression localizes to the degree term or the
/// spectral term.
#[derive(Debug, Clone, PartialEq)]
pub struct RankabilityReport {
    /// 1 - (hd(D,S) + hd(L,S)) / (2(n-1)), in [0, 1] for unit weights.
    pub spec_r: f64,
    /// Hausdorff distance between the out-degree multiset and {n-1, ..., 0}.
    pub hd_degree: f64,
    /// Hausdorff distance between the Laplacian spectrum and {n-1, ..., 0}.
    pub hd_laplacian: f64,
    pub n: usize,
    pub degree_spectrum: Spectrum,
    pub laplacian_spectrum: Spectrum,
}

/// Rankability score. Requires weights in [0, 1]; out-of-range weights are
/// rejected rather than clamped so winning-percentage data bugs surface.
///
/// The single-vertex graph is defined to have score 1: the ideal spectrum
/// is the 1x1 zero matrix and the normalization 2(n-1) vanishes, and a
/// single item is trivially rankable.
pub fn spec_r(g: &Digraph) -> Result<RankabilityReport> {
    ensure_unit_weights(g)?;
    let n = g.n();
    let degree_spectrum = Spectrum::from_reals(&g.out_degrees());
    let laplacian_spectrum = Spectrum::from_matrix(&g.laplacian())?;
    let ideal: Vec<f64> = (0..n).rev().map(|k| k as f64).collect();
    let s = Spectrum::from_reals(&ideal);
    let hd_degree = hausdorff(&s, &degree_spectrum)?.distance;
    let hd_laplacian = hausdorff(&s, &laplacian_spectrum)?.distance;
    let spec_r = if n == 1 {
        1.0
    } else {
        1.0 - (hd_degree + hd_laplacian) / (2.0 * (n as f64 - 1.0))
    };
    Ok(RankabilityReport {
        spec_r,
        hd_degree,
        hd_laplacian,
        n,
        degree_spectrum,
        laplacian_spectrum,
    })
}

/// Exact edge-change rankability of a binary-weight digraph.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeRankabilityResult {
    /// Minimum number of edge additions/deletions reaching some complete
    /// dominance graph.
    pub k: usize,
    /// Number of complete dominance graphs reachable with k changes.
    pub p: u64,
    /// 1 - k p / (k_max p_max).
    pub edge_r: f64,
    /// (n^2 - n) / 2.
    pub k_max: usize,
    /// n!.
    pub p_max: u64,
    /// Lexicographically first optimal vertex orders, capped.
    pub optimal_orders: Vec<Vec<usize>>,
}

/// Exhaustive edge-change rankability: scores every vertex permutation
/// against the dominance pattern it induces. Each permutation corresponds
/// to a distinct complete dominance graph, so minimizing mismatch count
/// over all n! permutations is exact.
///
/// Requires binary weights and n <= max_n (default
/// [`DEFAULT_EDGE_SEARCH_CAP`]; hard ceiling 20 so p_max fits in u64).
pub fn edge_r_exact(g: &Digraph, max_n: usize) -> Result<EdgeRankabilityResult> {
    let n = g.n();
    let max_n = max_n.min(20);
    if n > max_n {
        return Err(Error::TooManyVertices { n, max_n });
    }
    for i in 0..n {
        for j in 0..n {
            let w = g.weight(i, j);
            if w != 0.0 && w != 1.0 {
                return Err(Error::NonBinaryWeight { i, j, value: w });
            }
        }
    }

    // cost_before[u][v]: mismatch contribution of the unordered pair {u, v}
    // when u is ranked above v: the forward edge u->v must exist and the
    // back edge v->u must not.
    let mut cost_before = Matrix::zeros(n.max(1));
    for u in 0..n {
        for v in 0..n {
            if u != v {
                cost_before[(u, v)] = (1.0 - g.weight(u, v)) + g.weight(v, u);
            }
        }
    }

    let k_max = (n * n - n) / 2;
    let p_max = factorial(n as u64);
    let mut best = usize::MAX;
    let mut count: u64 = 0;
    let mut optimal: Vec<Vec<usize>> = Vec::new();

    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut cost = 0usize;
        for a in 0..n {
            for b in a + 1..n {
                cost += cost_before[(perm[a], perm[b])] as usize;
            }
        }
        if cost < best {
            best = cost;
            count = 1;
            optimal.clear();
            optimal.push(perm.clone());
        } else if cost == best {
            count += 1;
            if optimal.len() < OPTIMAL_ORDER_CAP {
                optimal.push(perm.clone());
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }

    let edge_r = if best == 0 {
        1.0
    } else {
        1.0 - (best as u64 * count) as f64 / (k_max as u64 * p_max) as f64
    };
    Ok(EdgeRankabilityResult {
        k: best,
        p: count,
        edge_r,
        k_max,
        p_max,
        optimal_orders: optimal,
    })
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The acyclic tournament with weight-1 edges from each vertex to every
/// vertex later in `order` (identity order if omitted).
pub fn dominance_graph(n: usize, order: Option<&[usize]>) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let identity: Vec<usize> = (0..n).collect();
    let order = match order {
        Some(o) => {
            let mut seen = vec![false; n];
            if o.len() != n {
                return Err(Error::NotAPermutation { n });
            }
            for &v in o {
                if v >= n || seen[v] {
                    return Err(Error::NotAPermutation { n });
                }
                seen[v] = true;
            }
            o.to_vec()
        }
        None => identity,
    };
    let mut w = Matrix::zeros(n);
    for a in 0..n {
        for b in a + 1..n {
            w[(order[a], order[b])] = 1.0;
        }
    }
    Digraph::from_weights(w)
}

/// Numerical spectral-degree test for complete dominance: the out-degree
/// multiset must equal {n-1, ..., 0} and the Laplacian spectrum must match
/// the same multiset within eigensolver tolerance.
pub fn is_complete_dominance(g: &Digraph) -> Result<bool> {
    ensure_unit_weights(g)?;
    let n = g.n();
    let mut degrees = g.out_degrees();
    degrees.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let matches_ideal = degrees
        .iter()
        .enumerate()
        .all(|(i, &d)| (d - (n - 1 - i) as f64).abs() < 1e-8);
    if !matches_ideal {
        return Ok(false);
    }
    let ideal: Vec<f64> = (0..n).rev().map(|k| k as f64).collect();
    let s = Spectrum::from_reals(&ideal);
    let spectrum = Spectrum::from_matrix(&g.laplacian())?;
    let hd = hausdorff(&s, &spectrum)?.distance;
    Ok(hd < 1e-6 * (n as f64).max(1.0))
}

/// Copy of `g` with the weight of (i, j) set to `new_weight`.
pub fn perturb_edge(g: &Digraph, i: usize, j: usize, new_weight: f64) -> Result<Digraph> {
    let n = g.n();
    if i == j {
        return Err(Error::DiagonalEdge { i });
    }
    for v in [i, j] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if new_weight < 0.0 {
        return Err(Error::NegativeWeight {
            i,
            j,
            value: new_weight,
        });
    }
    let mut w = g.weights().clone();
    w[(i, j)] = new_weight;
    let out = Digraph::from_weights(w)?;
    match g.labels() {
        Some(ls) => out.with_labels(ls.to_vec()),
        None => Ok(out),
    }
}

fn ensure_unit_weights(g: &Digraph) -> Result<()> {
    for i in 0..g.n() {
        for j in 0..g.n() {
            let w = g.weight(i, j);
            if !(0.0..=1.0).contains(&w) {
                return Err(Error::WeightOutOfRange { i, j, value: w });
            }
        }
    }
    Ok(())
}
