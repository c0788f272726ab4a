//! Rainbow paths in edge-colored graphs whose vertex sets all span many
//! colors.
//!
//! If every `X ⊆ V` spans at least `|X| - k` colors and `n >= n₀(k, l)`,
//! a rainbow path with `l` edges exists, where `n₀(k, 0) = 1`,
//! `n₀(k, 1) = k + 1` and `n₀(k, l) = (2l-1)!!·(k+l)` otherwise.
//! [`find_rainbow_path`] follows the inductive construction.

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Mask};

/// Largest vertex count for the exhaustive span check.
pub const SPAN_CHECK_CAP: usize = 20;

/// Simple graph with one color per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    colors: Vec<Option<usize>>,
}

impl EdgeColoredGraph {
    pub fn new(n: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::SizeCap { what: "|V|", size: n as u64, cap: 64 });
        }
        let mut colors = vec![None; n * n];
        for &(u, v, c) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { index: w, bound: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if colors[u * n + v].is_some() {
                return Err(Error::DuplicateEdge(u, v));
            }
            colors[u * n + v] = Some(c);
            colors[v * n + u] = Some(c);
        }
        Ok(EdgeColoredGraph { n, colors })
    }

    /// `K_n` with a proper edge coloring (round-robin 1-factorization for
    /// even `n`, a near-1-factorization for odd `n`).
    pub fn proper_complete(n: usize) -> Self {
        let m = n + n % 2;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let c = if m == 0 {
                    0
                } else if v == m - 1 {
                    (2 * u) % (m - 1)
                } else if u == m - 1 {
                    (2 * v) % (m - 1)
                } else {
                    (u + v) % (m - 1)
                };
                edges.push((u, v, c));
            }
        }
        Self::new(n, &edges).expect("valid complete graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn color(&self, u: usize, v: usize) -> Option<usize> {
        self.colors[u * self.n + v]
    }

    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(c) = self.color(u, v) {
                    out.push((u, v, c));
                }
            }
        }
        out
    }

    /// Number of distinct colors on edges inside `x`.
    pub fn span_count(&self, x: Mask) -> usize {
        let mut seen: Vec<usize> = Vec::new();
        for u in bits(x) {
            for v in bits(x >> (u + 1)).map(|d| d + u + 1) {
                if let Some(c) = self.color(u, v) {
                    if !seen.contains(&c) {
                        seen.push(c);
                    }
                }
            }
        }
        seen.len()
    }
}

/// `n₀(k, l)`.
pub fn double_factorial_bound(k: u64, l: u64) -> u128 {
    match l {
        0 => 1,
        1 => k as u128 + 1,
        _ => {
            let odd_product: u128 = (1..=l).map(|i| 2 * i as u128 - 1).product();
            odd_product * (k + l) as u128
        }
    }
}

/// Does every vertex subset `X` (singletons included) span at least
/// `|X| - k` colors?
pub fn span_condition_holds(gc: &EdgeColoredGraph, k: usize) -> Result<bool> {
    let n = gc.vertex_count();
    if n > SPAN_CHECK_CAP {
        return Err(Error::SizeCap { what: "|V| for span check", size: n as u64, cap: SPAN_CHECK_CAP as u64 });
    }
    Ok((0..=full_mask(n)).all(|x| gc.span_count(x) + k >= x.count_ones() as usize))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowPath {
    pub vertices: Vec<usize>,
    pub colors: Vec<usize>,
}

impl RainbowPath {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn validate(&self, gc: &EdgeColoredGraph) -> std::result::Result<(), String> {
        if self.vertices.len() != self.colors.len() + 1 {
            return Err("path needs one more vertex than edges".into());
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != self.vertices.len() {
            return Err("repeated vertex".into());
        }
        let mut cs = self.colors.clone();
        cs.sort_unstable();
        cs.dedup();
        if cs.len() != self.colors.len() {
            return Err("repeated color".into());
        }
        for (i, pair) in self.vertices.windows(2).enumerate() {
            if gc.color(pair[0], pair[1]) != Some(self.colors[i]) {
                return Err(format!("edge ({}, {}) does not have color {}", pair[0], pair[1], self.colors[i]));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowPathSearch {
    pub path: Option<RainbowPath>,
    /// Result of the exhaustive span check, when the graph is small enough.
    pub condition_verified: Option<bool>,
}

/// Find a rainbow path with `l` edges. Requires `n >= n₀(k, l)`.
///
/// If every vertex sees at least `2l` colors, a path with `l - 1` edges is
/// found recursively and extended at an endpoint with an unused color.
/// Otherwise some vertex `v` sees at most `2l - 1` colors; its largest
/// monochromatic neighborhood `S` (lowest color on ties) has at least
/// `n₀(k+1, l-1)` vertices. That color is deleted inside `S`, a path with
/// `l - 1` edges is found in `S`, and `v` is attached to its end.
///
/// A `None` path when the span condition was verified contradicts the
/// guarantee.
pub fn find_rainbow_path(gc: &EdgeColoredGraph, k: usize, l: usize) -> Result<RainbowPathSearch> {
    let n = gc.vertex_count();
    let needed = double_factorial_bound(k as u64, l as u64);
    if (n as u128) < needed {
        return Err(Error::Precondition(format!("need n >= n0({k}, {l}) = {needed}, got {n}")));
    }
    let condition_verified = if n <= 12 { Some(span_condition_holds(gc, k)?) } else { None };
    let mut deleted = Vec::new();
    let path = recurse(gc, full_mask(n), l, &mut deleted);
    Ok(RainbowPathSearch { path, condition_verified })
}

/// Color of `u–v` after the deletions `(S, c)`: edges of color `c` with both
/// ends in `S` are gone.
fn live_color(gc: &EdgeColoredGraph, deleted: &[(Mask, usize)], u: usize, v: usize) -> Option<usize> {
    let c = gc.color(u, v)?;
    let pair = (1 << u) | (1 << v);
    let gone = deleted.iter().any(|&(s, dc)| dc == c && s & pair == pair);
    (!gone).then_some(c)
}

fn recurse(gc: &EdgeColoredGraph, sub: Mask, l: usize, deleted: &mut Vec<(Mask, usize)>) -> Option<RainbowPath> {
    if sub == 0 {
        return None;
    }
    if l == 0 {
        return Some(RainbowPath { vertices: vec![sub.trailing_zeros() as usize], colors: Vec::new() });
    }
    if l == 1 {
        for u in bits(sub) {
            for v in bits(sub & !((1 << (u + 1)) - 1)) {
                if let Some(c) = live_color(gc, deleted, u, v) {
                    return Some(RainbowPath { vertices: vec![u, v], colors: vec![c] });
                }
            }
        }
        return None;
    }

    let incident = |v: usize, deleted: &[(Mask, usize)]| {
        let mut by_color: Vec<(usize, Mask)> = Vec::new();
        for w in bits(sub & !(1 << v)) {
            if let Some(c) = live_color(gc, deleted, v, w) {
                match by_color.iter_mut().find(|(col, _)| *col == c) {
                    Some((_, m)) => *m |= 1 << w,
                    None => by_color.push((c, 1 << w)),
                }
            }
        }
        by_color
    };

    let sparse = bits(sub).find(|&v| incident(v, deleted).len() < 2 * l);
    match sparse {
        None => {
            let shorter = recurse(gc, sub, l - 1, deleted)?;
            extend_at_either_end(gc, deleted, sub, shorter)
        }
        Some(v) => {
            let mut classes = incident(v, deleted);
            classes.sort_by_key(|&(c, m)| (std::cmp::Reverse(m.count_ones()), c));
            let &(red, s) = classes.first()?;
            deleted.push((s, red));
            let inner = recurse(gc, s, l - 1, deleted);
            deleted.pop();
            let mut path = inner?;
            path.vertices.push(v);
            path.colors.push(red);
            Some(path)
        }
    }
}

fn extend_at_either_end(
    gc: &EdgeColoredGraph,
    deleted: &[(Mask, usize)],
    sub: Mask,
    mut path: RainbowPath,
) -> Option<RainbowPath> {
    let on_path = path.vertices.iter().fold(0 as Mask, |m, &v| m | 1 << v);
    for at_end in [true, false] {
        let end = if at_end { *path.vertices.last().unwrap() } else { path.vertices[0] };
        for w in bits(sub & !on_path) {
            if let Some(c) = live_color(gc, deleted, end, w) {
                if !path.colors.contains(&c) {
                    if at_end {
                        path.vertices.push(w);
                        path.colors.push(c);
                    } else {
                        path.vertices.insert(0, w);
                        path.colors.insert(0, c);
                    }
                    return Some(path);
                }
            }
        }
    }
    None
}
