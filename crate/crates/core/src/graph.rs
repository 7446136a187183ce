//! Simple undirected graphs and the basic constructors: paths, cycles and
//! the strong product.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Immutable simple undirected graph stored as sorted adjacency lists.
///
/// Product and bundle graphs carry `(i, j)` coordinates for every vertex,
/// laid out row-major so that vertex `i * n + j` sits at `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    coords: Option<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::VertexOutOfRange { u, v, vertex_count });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            coords: None,
        })
    }

    pub fn with_coords(mut self, coords: Vec<(usize, usize)>) -> Result<Self> {
        if coords.len() != self.vertex_count() {
            return Err(Error::CoordCount {
                expected: self.vertex_count(),
                got: coords.len(),
            });
        }
        self.coords = Some(coords);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn coords(&self) -> Option<&[(usize, usize)]> {
        self.coords.as_deref()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Checks the structural invariants: sorted duplicate-free adjacency,
    /// no loops, all indices in range and symmetric adjacency.
    pub fn is_well_formed(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().enumerate().all(|(u, ns)| {
            ns.windows(2).all(|w| w[0] < w[1])
                && ns
                    .iter()
                    .all(|&v| v < n && v != u && self.adjacency[v].binary_search(&u).is_ok())
        })
    }
}

/// `P_n` on vertices `0..n`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` for `n >= 3`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete graph `K_t`.
pub fn make_complete(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::EmptyGraph);
    }
    Graph::from_edges(t, (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v))))
}

/// Strong product `G ⊠ H`. Vertex `(g, h)` gets index `g * |H| + h`.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let hn = h.vertex_count();
    let idx = |a: usize, b: usize| a * hn + b;
    let mut edges = Vec::new();
    for g1 in 0..g.vertex_count() {
        for h1 in 0..hn {
            for &h2 in h.neighbors(h1) {
                edges.push((idx(g1, h1), idx(g1, h2)));
            }
            for &g2 in g.neighbors(g1) {
                edges.push((idx(g1, h1), idx(g2, h1)));
                for &h2 in h.neighbors(h1) {
                    edges.push((idx(g1, h1), idx(g2, h2)));
                }
            }
        }
    }
    let coords = (0..g.vertex_count())
        .flat_map(|a| (0..hn).map(move |b| (a, b)))
        .collect();
    Graph::from_edges(g.vertex_count() * hn, edges)?.with_coords(coords)
}

/// Unordered pairs `(u, v)`, `u < v`, at shortest-path distance exactly 2,
/// found by a depth-2 breadth-first sweep from every vertex.
pub fn distance2_pairs(g: &Graph) -> BTreeSet<(usize, usize)> {
    let mut pairs = BTreeSet::new();
    for u in 0..g.vertex_count() {
        for v in distance2_from(g, u) {
            if u < v {
                pairs.insert((u, v));
            }
        }
    }
    pairs
}

/// Vertices at distance exactly 2 from `u`, sorted.
pub fn distance2_from(g: &Graph, u: usize) -> Vec<usize> {
    let mut out = BTreeSet::new();
    for &w in g.neighbors(u) {
        for &v in g.neighbors(w) {
            if v != u && !g.has_edge(u, v) {
                out.insert(v);
            }
        }
    }
    out.into_iter().collect()
}

/// Identity-map edge-set equality. This is not an isomorphism test.
pub fn is_isomorphic_edge_set(g1: &Graph, g2: &Graph) -> bool {
    g1.adjacency == g2.adjacency
}
