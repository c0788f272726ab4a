//! Graph representations shared by every other module.
//!
//! A-side vertex sets are `u64` bitmasks, so `|A|` (and the vertex count of a
//! [`Graph`] whenever mask-based routines are used) is capped at 64.

use std::collections::BTreeSet;

use crate::error::{Error, Result, Side};

/// Bitmask over the A side (or over the vertices of a small [`Graph`]).
pub type Mask = u64;

/// Largest A side representable by a [`Mask`].
pub const MAX_A: usize = 64;

/// Iterate the set bits of a mask in ascending order.
pub fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// A simple bipartite graph `G(A, B)`.
///
/// Stored as one neighborhood mask over `A` per B-vertex. In the colored
/// multigraph view each B-vertex is a color whose clique is its neighborhood.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    a_count: usize,
    b_adj: Vec<Mask>,
}

impl BipartiteGraph {
    /// Build from `(a, b)` pairs. Rejects out-of-range indices and duplicates.
    pub fn from_edge_list(a_count: usize, b_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_a_count(a_count)?;
        let mut b_adj = vec![0; b_count];
        for &(a, b) in edges {
            if a >= a_count {
                return Err(Error::IndexOutOfRange { side: Side::A, index: a, bound: a_count });
            }
            if b >= b_count {
                return Err(Error::IndexOutOfRange { side: Side::B, index: b, bound: b_count });
            }
            if b_adj[b] & (1 << a) != 0 {
                return Err(Error::DuplicateEdge(a, b));
            }
            b_adj[b] |= 1 << a;
        }
        Ok(BipartiteGraph { a_count, b_adj })
    }

    /// Build from one A-mask per B-vertex.
    pub fn from_neighborhoods(a_count: usize, b_adj: Vec<Mask>) -> Result<Self> {
        check_a_count(a_count)?;
        let full = full_mask(a_count);
        for &m in &b_adj {
            if m & !full != 0 {
                let index = (m & !full).trailing_zeros() as usize;
                return Err(Error::IndexOutOfRange { side: Side::A, index, bound: a_count });
            }
        }
        Ok(BipartiteGraph { a_count, b_adj })
    }

    pub fn a_count(&self) -> usize {
        self.a_count
    }

    pub fn b_count(&self) -> usize {
        self.b_adj.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.a_count + self.b_adj.len()
    }

    pub fn a_all(&self) -> Mask {
        full_mask(self.a_count)
    }

    /// Neighborhood of B-vertex `b` as an A-mask.
    pub fn b_mask(&self, b: usize) -> Mask {
        self.b_adj[b]
    }

    pub fn b_masks(&self) -> &[Mask] {
        &self.b_adj
    }

    pub fn b_degree(&self, b: usize) -> usize {
        self.b_adj[b].count_ones() as usize
    }

    pub fn a_degree(&self, a: usize) -> usize {
        self.b_adj.iter().filter(|&&m| m & (1 << a) != 0).count()
    }

    pub fn a_neighbors(&self, a: usize) -> Vec<usize> {
        (0..self.b_count()).filter(|&b| self.b_adj[b] & (1 << a) != 0).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.a_count && b < self.b_count() && self.b_adj[b] & (1 << a) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.b_adj.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// All edges as `(a, b)`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.a_count {
            for b in 0..self.b_count() {
                if self.b_adj[b] & (1 << a) != 0 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Combined vertex id of an A-vertex in [`BipartiteGraph::to_graph`].
    pub fn a_id(&self, a: usize) -> usize {
        a
    }

    /// Combined vertex id of a B-vertex in [`BipartiteGraph::to_graph`].
    pub fn b_id(&self, b: usize) -> usize {
        self.a_count + b
    }

    /// The same graph with A-vertices numbered `0..n` and B-vertices `n..n+m`.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> =
            self.edges().into_iter().map(|(a, b)| (a, self.b_id(b))).collect();
        Graph::from_edges(self.vertex_count(), &edges).expect("bipartite graph is simple")
    }

    /// Drop every B-vertex of degree at most 1.
    pub fn strip_degree_le1(&self) -> BipartiteGraph {
        self.strip_degree_le1_mapped().0
    }

    /// Like [`strip_degree_le1`](Self::strip_degree_le1), also returning the
    /// original index of every surviving B-vertex.
    pub fn strip_degree_le1_mapped(&self) -> (BipartiteGraph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.b_count()).filter(|&b| self.b_degree(b) >= 2).collect();
        let b_adj = kept.iter().map(|&b| self.b_adj[b]).collect();
        (BipartiteGraph { a_count: self.a_count, b_adj }, kept)
    }

    /// Color `i` of the result is the clique `N(b_i)`.
    pub fn to_colored_multigraph(&self) -> Result<ColoredMultigraph> {
        if self.a_count < 2 {
            return Err(Error::Precondition(format!("|A| = {} < 2", self.a_count)));
        }
        for b in 0..self.b_count() {
            let degree = self.b_degree(b);
            if degree < 2 {
                return Err(Error::DegreeTooSmall { vertex: b, degree });
            }
        }
        ColoredMultigraph::new(self.a_count, self.b_adj.clone())
    }
}

fn check_a_count(a_count: usize) -> Result<()> {
    if a_count == 0 {
        return Err(Error::Precondition("|A| must be at least 1".into()));
    }
    if a_count > MAX_A {
        return Err(Error::SizeCap { what: "|A|", size: a_count as u64, cap: MAX_A as u64 });
    }
    Ok(())
}

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { index: w, bound: vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_count: seen.len() })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// One neighborhood mask per vertex. Fails above 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<Mask>> {
        if self.adj.len() > 64 {
            return Err(Error::SizeCap { what: "|V|", size: self.adj.len() as u64, cap: 64 });
        }
        Ok(self.adj.iter().map(|list| mask_of(list)).collect())
    }
}

/// Complete graph `K_n` whose edge `{u, v}` carries every color `c` with
/// `u, v` in `clique(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredMultigraph {
    n: usize,
    cliques: Vec<Mask>,
}

impl ColoredMultigraph {
    pub fn new(n: usize, cliques: Vec<Mask>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("colored multigraph needs n >= 2, got {n}")));
        }
        check_a_count(n)?;
        let full = full_mask(n);
        for (c, &m) in cliques.iter().enumerate() {
            if m & !full != 0 {
                let index = (m & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { index, bound: n });
            }
            if m.count_ones() < 2 {
                return Err(Error::DegreeTooSmall { vertex: c, degree: m.count_ones() as usize });
            }
        }
        Ok(ColoredMultigraph { n, cliques })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.cliques.len()
    }

    pub fn clique(&self, color: usize) -> Mask {
        self.cliques[color]
    }

    pub fn cliques(&self) -> &[Mask] {
        &self.cliques
    }

    /// `Δ`: the largest clique size.
    pub fn max_clique_size(&self) -> usize {
        self.cliques.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    /// `S_e` for `e = {u, v}`, ascending.
    pub fn edge_colors(&self, u: usize, v: usize) -> Vec<usize> {
        let pair = (1 << u) | (1 << v);
        (0..self.cliques.len()).filter(|&c| self.cliques[c] & pair == pair).collect()
    }

    /// Number of colors appearing on at least one edge inside `x`.
    pub fn span_count(&self, x: Mask) -> usize {
        self.cliques.iter().filter(|&&m| (m & x).count_ones() >= 2).count()
    }
}

/// Vertex-disjoint cycles, optionally with one color per cycle edge.
///
/// Edge `i` of a cycle joins `cycle[i]` and `cycle[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleFamily {
    pub cycles: Vec<Vec<usize>>,
    pub colors: Option<Vec<Vec<usize>>>,
}

impl CycleFamily {
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        CycleFamily { cycles, colors: None }
    }

    /// All cycle edges as `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for cycle in &self.cycles {
            let len = cycle.len();
            for i in 0..len {
                let (u, v) = (cycle[i], cycle[(i + 1) % len]);
                out.push((u.min(v), u.max(v)));
            }
        }
        out
    }

    /// Degree of every vertex of a graph on `vertex_count` vertices in the
    /// union of the cycles.
    pub fn degrees(&self, vertex_count: usize) -> Vec<usize> {
        let mut deg = vec![0; vertex_count];
        for (u, v) in self.edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Checks disjointness, adjacency, minimum length (3, or 4 and even when
    /// `bipartite`), and the color constraints when colors are present.
    pub fn validate(&self, host: &Graph, bipartite: bool) -> std::result::Result<(), String> {
        let mut seen = vec![false; host.vertex_count()];
        for cycle in &self.cycles {
            if cycle.len() < 3 {
                return Err(format!("cycle {cycle:?} shorter than 3"));
            }
            if bipartite && (cycle.len() < 4 || cycle.len() % 2 != 0) {
                return Err(format!("cycle {cycle:?} is not an even cycle of length >= 4"));
            }
            for &v in cycle {
                if v >= seen.len() {
                    return Err(format!("vertex {v} out of range"));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(format!("vertex {v} repeated"));
                }
            }
            for i in 0..cycle.len() {
                let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                if !host.has_edge(u, v) {
                    return Err(format!("({u}, {v}) is not an edge"));
                }
            }
        }
        if let Some(colors) = &self.colors {
            let mut used = BTreeSet::new();
            if colors.len() != self.cycles.len() {
                return Err("color list does not match cycles".into());
            }
            for (cycle, cs) in self.cycles.iter().zip(colors) {
                if cs.len() != cycle.len() {
                    return Err("color list does not match cycle length".into());
                }
                for &c in cs {
                    if !used.insert(c) {
                        return Err(format!("color {c} used twice"));
                    }
                }
            }
        }
        Ok(())
    }
}
