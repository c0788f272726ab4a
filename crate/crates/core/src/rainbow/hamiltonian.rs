//! Exact search for rainbow Hamiltonian cycles in colored multigraphs.
//!
//! A cycle covering `A` in a dHp graph is the same thing as a Hamiltonian
//! cycle of the colored multigraph together with a choice of pairwise
//! distinct colors on its edges.
//!
//! The search extends a path from vertex 0 one vertex at a time. Colors are
//! not branched on directly: the edges of the current path and the colors
//! form a bipartite system of distinct representatives, maintained by
//! augmenting paths with an undo log. An edge is admitted only if the
//! system stays solvable, which is exactly the condition that some
//! assignment of distinct colors covers the path. Reflections of a cycle are
//! skipped by requiring the second vertex to be smaller than the last.

use crate::error::{Error, Result};
use crate::graph::{bits, BipartiteGraph, ColoredMultigraph, CycleFamily, Mask};

/// Largest `n` the exact search accepts by default.
pub const DEFAULT_CYCLE_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowCycle {
    /// Hamiltonian order starting at 0.
    pub vertices: Vec<usize>,
    /// `colors[i]` sits on the edge `vertices[i] → vertices[i + 1 mod n]`.
    pub colors: Vec<usize>,
}

impl RainbowCycle {
    pub fn validate(&self, m: &ColoredMultigraph) -> std::result::Result<(), String> {
        let n = m.vertex_count();
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(format!("{:?} is not a permutation of 0..{n}", self.vertices));
        }
        if self.colors.len() != n {
            return Err("one color per edge required".into());
        }
        let mut colors = self.colors.clone();
        colors.sort_unstable();
        colors.dedup();
        if colors.len() != n {
            return Err(format!("colors {:?} are not distinct", self.colors));
        }
        for i in 0..n {
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let c = self.colors[i];
            if c >= m.color_count() || m.clique(c) & (1 << u) == 0 || m.clique(c) & (1 << v) == 0 {
                return Err(format!("color {c} does not lie on edge ({u}, {v})"));
            }
        }
        Ok(())
    }

    /// The corresponding cycle of the bipartite graph, in combined vertex ids
    /// (`b_origin[c]` is the B-vertex behind color `c`).
    pub fn to_bipartite_cycle(&self, g: &BipartiteGraph, b_origin: &[usize]) -> CycleFamily {
        let mut cycle = Vec::with_capacity(2 * self.vertices.len());
        for (&a, &c) in self.vertices.iter().zip(&self.colors) {
            cycle.push(g.a_id(a));
            cycle.push(g.b_id(b_origin[c]));
        }
        CycleFamily::new(vec![cycle])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianSearch {
    pub cycle: Option<RainbowCycle>,
    pub nodes_expanded: u64,
    /// The whole search space was explored (no budget cut it short), so a
    /// missing cycle is a proof of non-existence.
    pub exhaustive: bool,
}

pub fn find_rainbow_hamiltonian_cycle(m: &ColoredMultigraph) -> Result<HamiltonianSearch> {
    find_rainbow_hamiltonian_cycle_with_cap(m, DEFAULT_CYCLE_CAP)
}

pub fn find_rainbow_hamiltonian_cycle_with_cap(m: &ColoredMultigraph, cap: usize) -> Result<HamiltonianSearch> {
    let n = m.vertex_count();
    if n > cap {
        return Err(Error::SizeCap { what: "n for cycle search", size: n as u64, cap: cap as u64 });
    }
    if n == 2 {
        // The covering cycle is a 4-cycle through two distinct common colors.
        let colors = m.edge_colors(0, 1);
        let cycle = (colors.len() >= 2).then(|| RainbowCycle { vertices: vec![0, 1], colors: colors[..2].to_vec() });
        return Ok(HamiltonianSearch { cycle, nodes_expanded: 1, exhaustive: true });
    }

    let mut search = Search::new(m);
    let found = search.extend();
    let cycle = found.then(|| search.current_cycle());
    Ok(HamiltonianSearch { cycle, nodes_expanded: search.nodes, exhaustive: true })
}

struct Search {
    n: usize,
    color_count: usize,
    /// Colors on each pair, row-major `u * n + v`.
    pair_colors: Vec<Vec<usize>>,
    /// Pairs carrying at least one color.
    colored_adj: Vec<Mask>,
    path: Vec<usize>,
    visited: Mask,
    /// Endpoints of each path edge.
    edge_ends: Vec<(usize, usize)>,
    /// Edge currently represented by each color.
    owner: Vec<Option<usize>>,
    undo: Vec<(usize, Option<usize>)>,
    seen: Vec<u32>,
    stamp: u32,
    nodes: u64,
}

impl Search {
    fn new(m: &ColoredMultigraph) -> Self {
        let n = m.vertex_count();
        let mut pair_colors = vec![Vec::new(); n * n];
        let mut colored_adj = vec![0; n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    let cs = m.edge_colors(u, v);
                    if !cs.is_empty() {
                        colored_adj[u] |= 1 << v;
                    }
                    pair_colors[u * n + v] = cs;
                }
            }
        }
        Search {
            n,
            color_count: m.color_count(),
            pair_colors,
            colored_adj,
            path: vec![0],
            visited: 1,
            edge_ends: Vec::with_capacity(n),
            owner: vec![None; m.color_count()],
            undo: Vec::new(),
            seen: vec![0; m.color_count()],
            stamp: 0,
            nodes: 0,
        }
    }

    fn colors_of(&self, e: usize) -> &[usize] {
        let (u, v) = self.edge_ends[e];
        &self.pair_colors[u * self.n + v]
    }

    fn augment(&mut self, e: usize) -> bool {
        for i in 0..self.colors_of(e).len() {
            let c = self.colors_of(e)[i];
            if self.seen[c] == self.stamp {
                continue;
            }
            self.seen[c] = self.stamp;
            let reassignable = match self.owner[c] {
                None => true,
                Some(other) => self.augment(other),
            };
            if reassignable {
                self.undo.push((c, self.owner[c]));
                self.owner[c] = Some(e);
                return true;
            }
        }
        false
    }

    /// Add the edge `u–v`; on failure the state is unchanged.
    fn push_edge(&mut self, u: usize, v: usize) -> Option<usize> {
        let mark = self.undo.len();
        self.edge_ends.push((u, v));
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
        if self.augment(self.edge_ends.len() - 1) {
            Some(mark)
        } else {
            self.edge_ends.pop();
            None
        }
    }

    fn pop_edge(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let (c, prev) = self.undo.pop().unwrap();
            self.owner[c] = prev;
        }
        self.edge_ends.pop();
    }

    /// Every unvisited vertex still needs two neighbors among the vertices
    /// that can be adjacent to it on the final cycle.
    fn feasible(&self) -> bool {
        let last = *self.path.last().unwrap();
        let unvisited = !self.visited & crate::graph::full_mask(self.n);
        if unvisited == 0 {
            return true;
        }
        let remaining_edges = unvisited.count_ones() as usize + 1;
        if self.edge_ends.len() + remaining_edges > self.color_count {
            return false;
        }
        if self.colored_adj[0] & unvisited == 0 || self.colored_adj[last] & unvisited == 0 {
            return false;
        }
        // Reflection symmetry: the last vertex must exceed the second.
        if self.path.len() >= 2 && (unvisited >> (self.path[1] + 1)) == 0 {
            return false;
        }
        let open = unvisited | (1 << last) | 1;
        bits(unvisited).all(|w| (self.colored_adj[w] & open).count_ones() >= 2)
    }

    fn extend(&mut self) -> bool {
        self.nodes += 1;
        let last = *self.path.last().unwrap();
        if self.path.len() == self.n {
            if self.path[1] > last {
                return false;
            }
            return self.push_edge(last, 0).is_some();
        }

        let unvisited = !self.visited & crate::graph::full_mask(self.n);
        let mut candidates: Vec<(u32, usize)> = bits(self.colored_adj[last] & unvisited)
            .map(|w| ((self.colored_adj[w] & unvisited).count_ones(), w))
            .collect();
        candidates.sort_unstable();

        for (_, w) in candidates {
            let Some(mark) = self.push_edge(last, w) else {
                continue;
            };
            self.path.push(w);
            self.visited |= 1 << w;
            if self.feasible() && self.extend() {
                return true;
            }
            self.visited &= !(1 << w);
            self.path.pop();
            self.pop_edge(mark);
        }
        false
    }

    fn current_cycle(&self) -> RainbowCycle {
        let mut colors = vec![usize::MAX; self.edge_ends.len()];
        for (c, owner) in self.owner.iter().enumerate() {
            if let Some(e) = owner {
                colors[*e] = c;
            }
        }
        RainbowCycle { vertices: self.path.clone(), colors }
    }
}

/// Independent oracle: every Hamiltonian cycle through vertex 0, each
/// checked by brute-force distinct color assignment.
pub fn rainbow_cycle_bruteforce(m: &ColoredMultigraph) -> Option<RainbowCycle> {
    let n = m.vertex_count();
    if n == 2 {
        let colors = m.edge_colors(0, 1);
        return (colors.len() >= 2).then(|| RainbowCycle { vertices: vec![0, 1], colors: colors[..2].to_vec() });
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut result = None;
    permute(&mut rest, 0, &mut |perm| {
        let mut vertices = vec![0];
        vertices.extend_from_slice(perm);
        let edges: Vec<Vec<usize>> =
            (0..n).map(|i| m.edge_colors(vertices[i], vertices[(i + 1) % n])).collect();
        let mut chosen = Vec::with_capacity(n);
        if assign_distinct(&edges, &mut chosen) {
            result = Some(RainbowCycle { vertices, colors: chosen });
            true
        } else {
            false
        }
    });
    result
}

fn permute(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permute(items, k + 1, visit) {
            return true;
        }
        items.swap(k, i);
    }
    false
}

fn assign_distinct(edges: &[Vec<usize>], chosen: &mut Vec<usize>) -> bool {
    let i = chosen.len();
    if i == edges.len() {
        return true;
    }
    for &c in &edges[i] {
        if !chosen.contains(&c) {
            chosen.push(c);
            if assign_distinct(edges, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{binary_tree_dhp, BinaryTree};

    #[test]
    fn c4_special_case() {
        let g = BipartiteGraph::from_edge_list(2, 2, &[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap();
        let m = g.to_colored_multigraph().unwrap();
        let r = find_rainbow_hamiltonian_cycle(&m).unwrap();
        let cycle = r.cycle.unwrap();
        assert_eq!(cycle, RainbowCycle { vertices: vec![0, 1], colors: vec![0, 1] });
        let fam = cycle.to_bipartite_cycle(&g, &[0, 1]);
        assert_eq!(fam.cycles, vec![vec![0, 2, 1, 3]]);
    }

    #[test]
    fn binary_tree_n4_has_cycle() {
        let g = binary_tree_dhp(&BinaryTree::complete(4).unwrap()).unwrap();
        let m = g.to_colored_multigraph().unwrap();
        let r = find_rainbow_hamiltonian_cycle(&m).unwrap();
        let cycle = r.cycle.expect("dHp instance");
        cycle.validate(&m).unwrap();
        let fam = cycle.to_bipartite_cycle(&g, &(0..g.b_count()).collect::<Vec<_>>());
        fam.validate(&g.to_graph(), true).unwrap();
    }

    #[test]
    fn single_color_triangle_has_none() {
        let m = ColoredMultigraph::new(3, vec![0b111]).unwrap();
        let r = find_rainbow_hamiltonian_cycle(&m).unwrap();
        assert_eq!(r.cycle, None);
        assert!(r.exhaustive);
        assert_eq!(rainbow_cycle_bruteforce(&m), None);
    }

    #[test]
    fn cap_enforced() {
        let m = ColoredMultigraph::new(15, vec![crate::graph::full_mask(15)]).unwrap();
        assert!(matches!(find_rainbow_hamiltonian_cycle(&m), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn agrees_with_bruteforce_on_random_multigraphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(2..=6);
            let colors = rng.gen_range(1..=n + 2);
            let cliques: Vec<Mask> = (0..colors)
                .map(|_| loop {
                    let c: Mask = rng.gen_range(0..(1u64 << n));
                    if c.count_ones() >= 2 {
                        break c;
                    }
                })
                .collect();
            let m = ColoredMultigraph::new(n, cliques).unwrap();
            let fast = find_rainbow_hamiltonian_cycle(&m).unwrap();
            let slow = rainbow_cycle_bruteforce(&m);
            assert_eq!(fast.cycle.is_some(), slow.is_some(), "{m:?}");
            if let Some(c) = fast.cycle {
                c.validate(&m).unwrap();
            }
        }
    }
}
