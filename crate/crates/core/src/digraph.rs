//! Weighted simple digraphs: Laplacian construction, strongly connected
//! components in Frobenius normal form order, acyclicity, and simple-cycle
//! enumeration (Johnson's algorithm).

use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Default ceiling on counted cycles; Johnson's output is exponential in
/// general, so past this the report is marked truncated.
pub const CYCLE_HARD_LIMIT: usize = 1_000_000;

/// A finite simple digraph with non-negative edge weights. An edge (i, j)
/// exists iff `w_ij > 0`; the diagonal is identically zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Digraph {
    n: usize,
    weights: Matrix,
    labels: Option<Vec<String>>,
}

impl Digraph {
    /// Build from an n x n weight matrix, rejecting non-finite or negative
    /// entries and nonzero diagonal entries (self-loops surface data bugs;
    /// they are never silently zeroed).
    pub fn from_weights(weights: Matrix) -> Result<Digraph> {
        let n = weights.n();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for i in 0..n {
            for j in 0..n {
                let w = weights[(i, j)];
                if !w.is_finite() {
                    return Err(Error::NonFiniteWeight { i, j });
                }
                if w < 0.0 {
                    return Err(Error::NegativeWeight { i, j, value: w });
                }
            }
            if weights[(i, i)] != 0.0 {
                return Err(Error::SelfLoop {
                    i,
                    value: weights[(i, i)],
                });
            }
        }
        Ok(Digraph {
            n,
            weights,
            labels: None,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Digraph> {
        Digraph::from_weights(Matrix::from_rows(rows))
    }

    /// Graph on `n` vertices from weighted edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Digraph> {
        let mut w = Matrix::zeros(n.max(1));
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for &(i, j, weight) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            w[(i, j)] = weight;
        }
        Digraph::from_weights(w)
    }

    /// Binary-weight graph on `n` vertices from an edge list.
    pub fn from_binary_edges(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
        let weighted: Vec<(usize, usize, f64)> = edges.iter().map(|&(i, j)| (i, j, 1.0)).collect();
        Digraph::from_edges(n, &weighted)
    }

    pub fn empty(n: usize) -> Result<Digraph> {
        Digraph::from_weights(Matrix::zeros(n))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Digraph> {
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel { label: l.clone() });
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[(i, j)]
    }

    pub fn weights(&self) -> &Matrix {
        &self.weights
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    /// Out-degree vector: d+(i) is the sum of weights leaving vertex i.
    pub fn out_degrees(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.weights.row_sum(i)).collect()
    }

    /// Graph Laplacian L = D - A with D the out-degree diagonal; every row
    /// sums to zero by construction.
    pub fn laplacian(&self) -> Matrix {
        let mut l = Matrix::zeros(self.n);
        for i in 0..self.n {
            let d = self.weights.row_sum(i);
            for j in 0..self.n {
                l[(i, j)] = -self.weights[(i, j)];
            }
            l[(i, i)] = d;
        }
        l
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).filter(|&j| self.weights[(i, j)] > 0.0).collect())
            .collect()
    }

    /// Strongly connected components in Frobenius normal form order.
    pub fn scc(&self) -> SccDecomposition {
        let adj = self.adjacency_lists();
        let comps = tarjan(&adj);

        // Condensation, then a topological order with ties broken by the
        // smallest original vertex so output is deterministic. Components
        // are emitted so that all edges point from earlier to later.
        let ncomp = comps.len();
        let mut comp_of = vec![0usize; self.n];
        for (cid, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = cid;
            }
        }
        let mut indegree = vec![0usize; ncomp];
        let mut dag = vec![Vec::new(); ncomp];
        for u in 0..self.n {
            for &v in &adj[u] {
                let (cu, cv) = (comp_of[u], comp_of[v]);
                if cu != cv {
                    dag[cu].push(cv);
                }
            }
        }
        for edges in dag.iter_mut() {
            edges.sort_unstable();
            edges.dedup();
            for &v in edges.iter() {
                indegree[v] += 1;
            }
        }

        let min_vertex: Vec<usize> = comps.iter().map(|c| *c.iter().min().unwrap()).collect();
        // Min-heap keyed by smallest contained vertex.
        let mut ready: BinaryHeap<std::cmp::Reverse<(usize, usize)>> = (0..ncomp)
            .filter(|&c| indegree[c] == 0)
            .map(|c| std::cmp::Reverse((min_vertex[c], c)))
            .collect();
        let mut order = Vec::with_capacity(ncomp);
        while let Some(std::cmp::Reverse((_, c))) = ready.pop() {
            order.push(c);
            for &v in &dag[c] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.push(std::cmp::Reverse((min_vertex[v], v)));
                }
            }
        }
        debug_assert_eq!(order.len(), ncomp);

        let mut components = Vec::with_capacity(ncomp);
        let mut permutation = Vec::with_capacity(self.n);
        let mut isolated = Vec::with_capacity(ncomp);
        for &c in &order {
            let mut vs = comps[c].clone();
            vs.sort_unstable();
            let iso = vs.iter().all(|&i| {
                (0..self.n).all(|j| comp_of[j] == c || self.weights[(i, j)] == 0.0)
            });
            isolated.push(iso);
            permutation.extend_from_slice(&vs);
            components.push(vs);
        }
        SccDecomposition {
            components,
            permutation,
            isolated_flags: isolated,
        }
    }

    /// True iff the digraph has no directed cycle, i.e. every strongly
    /// connected component is a single vertex.
    pub fn is_acyclic(&self) -> bool {
        self.scc().components.iter().all(|c| c.len() == 1)
    }

    /// Enumerate simple directed cycles over the weight support with
    /// Johnson's algorithm. `list_cap` bounds how many cycles are listed;
    /// counting continues to [`CYCLE_HARD_LIMIT`], past which the report
    /// is truncated.
    pub fn simple_cycles(&self, list_cap: Option<usize>) -> CycleReport {
        self.simple_cycles_with_limit(list_cap, CYCLE_HARD_LIMIT)
    }

    pub fn simple_cycles_with_limit(&self, list_cap: Option<usize>, hard_limit: usize) -> CycleReport {
        let adj = self.adjacency_lists();
        let mut johnson = Johnson::new(&adj, list_cap, hard_limit);
        johnson.run();
        CycleReport {
            count: johnson.count,
            cycles: johnson.cycles,
            truncated: johnson.truncated,
        }
    }
}

/// Strongly connected components listed in a topological order of the
/// condensation: component k has no edges into components 1..k-1, so the
/// permuted Laplacian is block upper triangular with irreducible diagonal
/// blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Vertex sets, each sorted ascending.
    pub components: Vec<Vec<usize>>,
    /// Vertex order realizing the normal form: new position -> original
    /// vertex. Apply with `Matrix::permuted`.
    pub permutation: Vec<usize>,
    /// Per-component: true when no edge leaves the component.
    pub isolated_flags: Vec<bool>,
}

impl SccDecomposition {
    pub fn isolated_count(&self) -> usize {
        self.isolated_flags.iter().filter(|&&b| b).count()
    }
}

/// Result of simple-cycle enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    /// Number of simple cycles counted; exact when `truncated` is false.
    pub count: usize,
    /// Listed cycles as vertex sequences (first vertex is the smallest in
    /// the cycle); at most the requested cap.
    pub cycles: Vec<Vec<usize>>,
    /// True when counting stopped at the hard limit.
    pub truncated: bool,
}

fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: usize,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        stack: Vec<usize>,
        on_stack: Vec<bool>,
        comps: Vec<Vec<usize>>,
    }
    fn connect(v: usize, s: &mut State) {
        s.idx[v] = Some(s.index);
        s.low[v] = s.index;
        s.index += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for &w in &s.adj[v] {
            if s.idx[w].is_none() {
                connect(w, s);
                s.low[v] = s.low[v].min(s.low[w]);
            } else if s.on_stack[w] {
                s.low[v] = s.low[v].min(s.idx[w].unwrap());
            }
        }
        if s.low[v] == s.idx[v].unwrap() {
            let mut comp = Vec::new();
            loop {
                let w = s.stack.pop().expect("tarjan stack underflow");
                s.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            s.comps.push(comp);
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        index: 0,
        idx: vec![None; n],
        low: vec![0; n],
        stack: Vec::new(),
        on_stack: vec![false; n],
        comps: Vec::new(),
    };
    for v in 0..n {
        if s.idx[v].is_none() {
            connect(v, &mut s);
        }
    }
    s.comps
}

/// Johnson's elementary-circuit enumeration with blocked sets. Start
/// vertices run in increasing order; each search is restricted to the
/// start vertex's SCC within the subgraph on vertices >= start.
struct Johnson<'a> {
    adj: &'a [Vec<usize>],
    list_cap: usize,
    hard_limit: usize,
    count: usize,
    cycles: Vec<Vec<usize>>,
    truncated: bool,
    blocked: Vec<bool>,
    block_map: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl<'a> Johnson<'a> {
    fn new(adj: &'a [Vec<usize>], list_cap: Option<usize>, hard_limit: usize) -> Self {
        let n = adj.len();
        Johnson {
            adj,
            list_cap: list_cap.unwrap_or(usize::MAX),
            hard_limit,
            count: 0,
            cycles: Vec::new(),
            truncated: false,
            blocked: vec![false; n],
            block_map: vec![Vec::new(); n],
            path: Vec::new(),
        }
    }

    fn run(&mut self) {
        let n = self.adj.len();
        for start in 0..n {
            if self.truncated {
                return;
            }
            // SCC of `start` in the subgraph induced on {start, ..., n-1}.
            let sub: Vec<Vec<usize>> = (0..n)
                .map(|v| {
                    if v < start {
                        Vec::new()
                    } else {
                        self.adj[v].iter().copied().filter(|&w| w >= start).collect()
                    }
                })
                .collect();
            let comps = tarjan(&sub);
            let comp = comps
                .into_iter()
                .find(|c| c.contains(&start))
                .unwrap_or_default();
            if comp.len() < 2 {
                continue;
            }
            let in_comp: Vec<bool> = {
                let mut f = vec![false; n];
                for &v in &comp {
                    f[v] = true;
                }
                f
            };
            for v in &comp {
                self.blocked[*v] = false;
                self.block_map[*v].clear();
            }
            self.path.clear();
            self.circuit(start, start, &in_comp);
        }
    }

    fn circuit(&mut self, v: usize, start: usize, in_comp: &[bool]) -> bool {
        let mut found = false;
        self.path.push(v);
        self.blocked[v] = true;
        for idx in 0..self.adj[v].len() {
            let w = self.adj[v][idx];
            if !in_comp[w] || self.truncated {
                continue;
            }
            if w == start {
                self.count += 1;
                if self.cycles.len() < self.list_cap {
                    self.cycles.push(self.path.clone());
                }
                if self.count >= self.hard_limit {
                    self.truncated = true;
                }
                found = true;
            } else if !self.blocked[w] && self.circuit(w, start, in_comp) {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for idx in 0..self.adj[v].len() {
                let w = self.adj[v][idx];
                if in_comp[w] && !self.block_map[w].contains(&v) {
                    self.block_map[w].push(v);
                }
            }
        }
        self.path.pop();
        found
    }

    fn unblock(&mut self, v: usize) {
        let mut todo = vec![v];
        while let Some(u) = todo.pop() {
            if self.blocked[u] {
                self.blocked[u] = false;
                todo.extend(std::mem::take(&mut self.block_map[u]));
            }
        }
    }
}
