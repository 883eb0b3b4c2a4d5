//! Simple undirected graphs on `0..n` stored as bit matrices, plus the
//! strongly-regular bookkeeping built on top of them.

mod io;
mod params;

pub use io::{parse_graph, read_graph, render_graph, write_graph};
pub use params::SrgParams;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph with a symmetric, irreflexive bit-matrix adjacency.
///
/// Neighbour lists are kept alongside the bit rows: refinement and matrix
/// products iterate neighbours, common-neighbour counts use row ANDs.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    adj: Vec<Vec<u32>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, bits: vec![0; n * words], adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::ParamRange(format!("loop at vertex {u}")));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_lists();
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_bit(u, v);
                    g.set_bit(v, u);
                }
            }
        }
        g.rebuild_lists();
        g
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    fn rebuild_lists(&mut self) {
        for u in 0..self.n {
            let row = &self.bits[u * self.words..(u + 1) * self.words];
            let mut list = Vec::new();
            for (w, &word) in row.iter().enumerate() {
                let mut x = word;
                while x != 0 {
                    let b = x.trailing_zeros() as usize;
                    list.push((w * 64 + b) as u32);
                    x &= x - 1;
                }
            }
            self.adj[u] = list;
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| self.adj[u].iter().map(|&v| v as usize).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Applies a vertex relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v]))).expect("relabelling is a bijection")
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Splits the vertices around `omega` into `{ω}`, neighbours, non-neighbours.
    pub fn partition_at(&self, omega: usize) -> Result<VertexPartition> {
        if omega >= self.n {
            return Err(Error::VertexOutOfRange { vertex: omega, n: self.n });
        }
        let (mut d1, mut d2) = (Vec::new(), Vec::new());
        for v in 0..self.n {
            if v == omega {
                continue;
            }
            if self.has_edge(omega, v) {
                d1.push(v);
            } else {
                d2.push(v);
            }
        }
        Ok(VertexPartition { omega, cells: [vec![omega], d1, d2] })
    }

    /// First and second subconstituents with respect to `omega`.
    pub fn subconstituents(&self, omega: usize) -> Result<(Graph, Graph, VertexPartition)> {
        let part = self.partition_at(omega)?;
        let g1 = self.induced(&part.cells[1]);
        let g2 = self.induced(&part.cells[2]);
        Ok((g1, g2, part))
    }

    /// The m-clique extension: vertex `(i, v)` is numbered `i * n + v`.
    pub fn clique_extension(&self, m: usize) -> Result<Graph> {
        if m == 0 {
            return Err(Error::ParamRange("clique extension needs m ≥ 1".into()));
        }
        let n = self.n;
        Ok(Graph::from_fn(m * n, |a, b| {
            let (u, v) = (a % n, b % n);
            if u == v {
                a != b
            } else {
                self.has_edge(u, v)
            }
        }))
    }

    /// The sets of common-neighbour counts over adjacent and over
    /// non-adjacent vertex pairs.
    pub fn common_neighbour_profile(&self) -> CommonNeighbourProfile {
        let mut prof = CommonNeighbourProfile::default();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let c = self.common_neighbours(u, v);
                let (set, first) = if self.has_edge(u, v) {
                    (&mut prof.adjacent, &mut prof.adjacent_witnesses)
                } else {
                    (&mut prof.non_adjacent, &mut prof.non_adjacent_witnesses)
                };
                if set.insert(c) {
                    first.push((u, v, c));
                }
            }
        }
        prof
    }

    /// Strong regularity in the wide sense: regular, with constant
    /// common-neighbour counts wherever the pair class is nonempty. Accepts
    /// complete graphs, edgeless graphs and disjoint unions of equal cliques.
    pub fn is_strongly_regular_wide(&self) -> bool {
        if self.regular_degree().is_none() {
            return false;
        }
        let prof = self.common_neighbour_profile();
        prof.adjacent.len() <= 1 && prof.non_adjacent.len() <= 1
    }
}

/// Observed common-neighbour counts; witnesses record the first pair giving
/// each distinct count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommonNeighbourProfile {
    pub adjacent: BTreeSet<usize>,
    pub non_adjacent: BTreeSet<usize>,
    pub adjacent_witnesses: Vec<(usize, usize, usize)>,
    pub non_adjacent_witnesses: Vec<(usize, usize, usize)>,
}

/// `Δ₀ = {ω}`, `Δ₁` = neighbours of ω, `Δ₂` = non-neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub omega: usize,
    pub cells: [Vec<usize>; 3],
}

impl VertexPartition {
    /// Cell index (0, 1, 2) per vertex.
    pub fn labels(&self, n: usize) -> Vec<u8> {
        let mut out = vec![0; n];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = i as u8;
            }
        }
        out
    }
}

/// Returns the SRG parameters of `g`, or `NotSrg` with the first violating
/// pair. Complete and edgeless graphs are rejected.
pub fn is_strongly_regular(g: &Graph) -> Result<SrgParams> {
    let n = g.order();
    let fail = |reason: String, pair| Err(Error::NotSrg { reason, pair });
    if n < 2 {
        return fail(format!("{n} vertices"), None);
    }
    let k = g.degree(0);
    if let Some(v) = (0..n).find(|&v| g.degree(v) != k) {
        return fail(format!("vertex {v} has degree {} but vertex 0 has degree {k}", g.degree(v)), Some((0, v)));
    }
    if k == 0 {
        return fail("edgeless graph".into(), None);
    }
    if k == n - 1 {
        return fail("complete graph".into(), None);
    }
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbours(u, v);
            let (slot, name) = if g.has_edge(u, v) { (&mut lambda, "adjacent") } else { (&mut mu, "non-adjacent") };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => {
                    return fail(
                        format!("{name} pair ({u},{v}) has {c} common neighbours, expected {x}"),
                        Some((u, v)),
                    );
                }
                _ => {}
            }
        }
    }
    let params = SrgParams { n: n as u64, k: k as u64, lambda: lambda.unwrap_or(0) as u64, mu: mu.unwrap_or(0) as u64 };
    params.validate()?;
    Ok(params)
}
