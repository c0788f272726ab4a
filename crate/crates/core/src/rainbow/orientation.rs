//! Balanced orientations of multigraphs.

use crate::error::{Error, Result};

/// Loopless multigraph; parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { index: w, bound: vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        Ok(Multigraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

/// One arc `(tail, head)` per multigraph edge, in edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
}

impl Orientation {
    pub fn imbalance(&self, v: usize) -> usize {
        self.out_degree[v].abs_diff(self.in_degree[v])
    }

    pub fn max_imbalance(&self) -> usize {
        (0..self.out_degree.len()).map(|v| self.imbalance(v)).max().unwrap_or(0)
    }
}

/// Orient every edge so that `|d⁺(v) - d⁻(v)| <= 1` at each vertex.
///
/// Odd-degree vertices are joined to an auxiliary vertex, making every
/// component Eulerian. Edges are oriented in the direction an Euler tour
/// (Hierholzer, lowest vertex and lowest edge id first) traverses them; the
/// auxiliary arcs are then dropped, each costing its endpoint at most one
/// unit of balance.
pub fn balanced_orientation(h: &Multigraph) -> Orientation {
    let n = h.vertex_count();
    let aux = n;
    let mut edges = h.edges.clone();
    for (v, d) in h.degrees().into_iter().enumerate() {
        if d % 2 == 1 {
            edges.push((v, aux));
        }
    }
    let mut incident = vec![Vec::new(); n + 1];
    for (e, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }

    let mut direction: Vec<Option<(usize, usize)>> = vec![None; edges.len()];
    let mut cursor = vec![0; n + 1];
    for start in 0..=n {
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            let list = &incident[v];
            while cursor[v] < list.len() && direction[list[cursor[v]]].is_some() {
                cursor[v] += 1;
            }
            if cursor[v] == list.len() {
                stack.pop();
                continue;
            }
            let e = list[cursor[v]];
            let (a, b) = edges[e];
            let w = if a == v { b } else { a };
            direction[e] = Some((v, w));
            stack.push(w);
        }
    }

    let arcs: Vec<(usize, usize)> = direction[..h.edges.len()]
        .iter()
        .map(|d| d.expect("every edge lies on the tour"))
        .collect();
    let mut out_degree = vec![0; n];
    let mut in_degree = vec![0; n];
    for &(t, hd) in &arcs {
        out_degree[t] += 1;
        in_degree[hd] += 1;
    }
    Orientation { arcs, out_degree, in_degree }
}
