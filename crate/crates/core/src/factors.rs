//! Parity factors: condition checkers, exhaustive violation scanners, and
//! 2-factor construction via a Tutte-style gadget and perfect matching.
//!
//! A covering 2-factor of `G(A, B)` is the `(g, f)`-parity factor with
//! `f ≡ 2`, `g = 2` on `A` and `g = 0` on `B`. Vertex ids follow
//! [`BipartiteGraph::to_graph`]: A-vertices first, then B-vertices.

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, mask_of, BipartiteGraph, CycleFamily, Graph, Mask};
use crate::matching::perfect_matching;

/// Largest number of `(S, T)` assignments a scanner will enumerate.
pub const DEFAULT_SCAN_CAP: u64 = 43_046_721; // 3^16

/// Largest edge count the exhaustive factor oracle accepts.
pub const DEFAULT_EXHAUSTIVE_EDGE_CAP: usize = 64;

/// Degree bounds `g(v) <= deg(v) <= f(v)` with `deg(v) ≡ f(v) (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityFactorSpec {
    pub f: Vec<u32>,
    pub g: Vec<u32>,
}

impl ParityFactorSpec {
    pub fn new(f: Vec<u32>, g: Vec<u32>) -> Result<Self> {
        if f.len() != g.len() {
            return Err(Error::Precondition("f and g have different lengths".into()));
        }
        for (v, (&fv, &gv)) in f.iter().zip(&g).enumerate() {
            if gv > fv || (fv - gv) % 2 != 0 {
                return Err(Error::Precondition(format!(
                    "vertex {v}: need g <= f and g ≡ f (mod 2), got g = {gv}, f = {fv}"
                )));
            }
        }
        Ok(ParityFactorSpec { f, g })
    }

    /// `f = g = 2` everywhere: an ordinary 2-factor.
    pub fn two_factor(vertex_count: usize) -> Self {
        ParityFactorSpec { f: vec![2; vertex_count], g: vec![2; vertex_count] }
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }
}

/// `f ≡ 2`; `g = 2` on A and `0` on B.
pub fn covering_spec(g: &BipartiteGraph) -> ParityFactorSpec {
    let mut lower = vec![2; g.a_count()];
    lower.resize(g.vertex_count(), 0);
    ParityFactorSpec { f: vec![2; g.vertex_count()], g: lower }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub satisfied: bool,
    pub violating_s: Option<Vec<usize>>,
    pub violating_t: Option<Vec<usize>>,
    pub lhs: u64,
    pub rhs: u64,
    /// `q(S, T)` for the Lovász condition; `Σ_C ⌊e(C,T)/2⌋` for Belck's.
    pub q_value: u64,
    /// Number of `(S, T)` pairs evaluated (1 for a single check).
    pub pairs_examined: u64,
}

impl ConditionReport {
    fn single(s: Mask, t: Mask, lhs: u64, rhs: u64, q_value: u64) -> Self {
        let satisfied = lhs <= rhs;
        ConditionReport {
            satisfied,
            violating_s: (!satisfied).then(|| bits(s).collect()),
            violating_t: (!satisfied).then(|| bits(t).collect()),
            lhs,
            rhs,
            q_value,
            pairs_examined: 1,
        }
    }

    fn all_clear(pairs_examined: u64) -> Self {
        ConditionReport {
            satisfied: true,
            violating_s: None,
            violating_t: None,
            lhs: 0,
            rhs: 0,
            q_value: 0,
            pairs_examined,
        }
    }
}

/// Mask-based view used by the condition evaluators.
struct Evaluator<'a> {
    adj: Vec<Mask>,
    full: Mask,
    spec: &'a ParityFactorSpec,
    g_odd: Mask,
}

impl<'a> Evaluator<'a> {
    fn new(graph: &Graph, spec: &'a ParityFactorSpec) -> Result<Self> {
        if spec.len() != graph.vertex_count() {
            return Err(Error::Precondition(format!(
                "spec covers {} vertices, graph has {}",
                spec.len(),
                graph.vertex_count()
            )));
        }
        let adj = graph.adjacency_masks()?;
        let g_odd = (0..spec.len()).filter(|&v| spec.g[v] % 2 == 1).fold(0, |m, v| m | 1 << v);
        Ok(Evaluator { adj, full: full_mask(graph.vertex_count()), spec, g_odd })
    }

    /// Vertices `v` outside `T` with `g(v) + e(v, T)` odd.
    fn odd_mask(&self, t: Mask) -> Mask {
        let mut odd = self.g_odd;
        for v in bits(self.full & !t) {
            if (self.adj[v] & t).count_ones() % 2 == 1 {
                odd ^= 1 << v;
            }
        }
        odd & !t
    }

    /// Number of components of `G - removed` meeting `odd` an odd number of times.
    fn odd_components(&self, removed: Mask, odd: Mask) -> u64 {
        let mut rest = self.full & !removed;
        let mut count = 0;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & rest & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            if (comp & odd).count_ones() % 2 == 1 {
                count += 1;
            }
        }
        count
    }

    fn q(&self, s: Mask, t: Mask) -> u64 {
        self.odd_components(s | t, self.odd_mask(t))
    }

    fn sum(&self, values: &[u32], set: Mask) -> u64 {
        bits(set).map(|v| values[v] as u64).sum()
    }

    /// `Σ_{v∈T} d_{G-S}(v)`.
    fn degree_sum(&self, s: Mask, t: Mask) -> u64 {
        bits(t).map(|v| (self.adj[v] & !s).count_ones() as u64).sum()
    }

    fn lovasz(&self, s: Mask, t: Mask) -> ConditionReport {
        let q = self.q(s, t);
        let lhs = self.sum(&self.spec.g, t) + q;
        let rhs = self.sum(&self.spec.f, s) + self.degree_sum(s, t);
        ConditionReport::single(s, t, lhs, rhs, q)
    }

    /// Scan `T` over subsets of `t_domain` and `S` over subsets of the rest.
    fn scan(&self, t_domain: Mask) -> ConditionReport {
        let mut examined = 0u64;
        let mut t = 0;
        loop {
            let odd = self.odd_mask(t);
            let g_t = self.sum(&self.spec.g, t);
            let s_domain = self.full & !t;
            let mut s = 0;
            loop {
                examined += 1;
                let rhs = self.sum(&self.spec.f, s) + self.degree_sum(s, t);
                // Every odd component contains a vertex of `odd`.
                let q_bound = (odd & !s).count_ones() as u64;
                if g_t + q_bound > rhs {
                    let q = self.odd_components(s | t, odd);
                    if g_t + q > rhs {
                        let mut report = ConditionReport::single(s, t, g_t + q, rhs, q);
                        report.pairs_examined = examined;
                        return report;
                    }
                }
                s = s.wrapping_sub(s_domain) & s_domain;
                if s == 0 {
                    break;
                }
            }
            t = t.wrapping_sub(t_domain) & t_domain;
            if t == 0 {
                break;
            }
        }
        ConditionReport::all_clear(examined)
    }
}

fn to_mask(set: &[usize], n: usize) -> Result<Mask> {
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, bound: n });
        }
    }
    Ok(mask_of(set))
}

fn disjoint_masks(s: &[usize], t: &[usize], n: usize) -> Result<(Mask, Mask)> {
    let (sm, tm) = (to_mask(s, n)?, to_mask(t, n)?);
    if sm & tm != 0 {
        return Err(Error::Overlap((sm & tm).trailing_zeros() as usize));
    }
    Ok((sm, tm))
}

/// `q(S, T)`: components `C` of `G - (S ∪ T)` with `g(C) + e(C, T)` odd.
pub fn q_count(graph: &Graph, s: &[usize], t: &[usize], spec: &ParityFactorSpec) -> Result<u64> {
    let (sm, tm) = disjoint_masks(s, t, graph.vertex_count())?;
    Ok(Evaluator::new(graph, spec)?.q(sm, tm))
}

/// Evaluate `g(T) + q(S,T) <= f(S) + Σ_{v∈T} d_{G-S}(v)` for one pair.
pub fn check_lovasz(
    graph: &Graph,
    spec: &ParityFactorSpec,
    s: &[usize],
    t: &[usize],
) -> Result<ConditionReport> {
    let (sm, tm) = disjoint_masks(s, t, graph.vertex_count())?;
    Ok(Evaluator::new(graph, spec)?.lovasz(sm, tm))
}

/// The Lovász condition for the covering spec of `g`, evaluated both in
/// general form and in the specialised form
/// `2|T ∩ A| + q(S,T) <= 2|S| + Σ_{v∈T} d_{G-S}(v)`, where `q` counts
/// components with `e(C, T)` odd. The two must agree.
pub fn check_lovasz_covering(g: &BipartiteGraph, s: &[usize], t: &[usize]) -> Result<ConditionReport> {
    let graph = g.to_graph();
    let spec = covering_spec(g);
    let general = check_lovasz(&graph, &spec, s, t)?;

    let (sm, tm) = disjoint_masks(s, t, graph.vertex_count())?;
    let adj = graph.adjacency_masks()?;
    let a_all = g.a_all();
    let mut odd_edges = 0;
    for v in bits(full_mask(graph.vertex_count()) & !tm) {
        if (adj[v] & tm).count_ones() % 2 == 1 {
            odd_edges |= 1 << v;
        }
    }
    let eval = Evaluator::new(&graph, &spec)?;
    let q = eval.odd_components(sm | tm, odd_edges);
    let lhs = 2 * (tm & a_all).count_ones() as u64 + q;
    let rhs = 2 * sm.count_ones() as u64 + eval.degree_sum(sm, tm);
    assert_eq!(
        (general.lhs, general.rhs, general.q_value),
        (lhs, rhs, q),
        "general and covering forms of the Lovász condition disagree"
    );
    Ok(general)
}

fn scan_size_check(assignments: f64, cap: u64) -> Result<()> {
    if assignments > cap as f64 {
        return Err(Error::SizeCap {
            what: "(S,T) assignments",
            size: assignments.min(u64::MAX as f64) as u64,
            cap,
        });
    }
    Ok(())
}

/// Exhaustive search for a disjoint `(S, T)` violating the Lovász condition.
pub fn find_lovasz_violation(graph: &Graph, spec: &ParityFactorSpec) -> Result<ConditionReport> {
    find_lovasz_violation_with_cap(graph, spec, DEFAULT_SCAN_CAP)
}

pub fn find_lovasz_violation_with_cap(
    graph: &Graph,
    spec: &ParityFactorSpec,
    cap: u64,
) -> Result<ConditionReport> {
    scan_size_check(3f64.powi(graph.vertex_count() as i32), cap)?;
    let eval = Evaluator::new(graph, spec)?;
    Ok(eval.scan(eval.full))
}

/// Violation scan for the covering spec, with `T` restricted to `A`
/// (adding B-vertices to `T` never creates a violation).
pub fn find_covering_lovasz_violation(g: &BipartiteGraph) -> Result<ConditionReport> {
    find_covering_lovasz_violation_with_cap(g, DEFAULT_SCAN_CAP)
}

pub fn find_covering_lovasz_violation_with_cap(g: &BipartiteGraph, cap: u64) -> Result<ConditionReport> {
    let assignments = 3f64.powi(g.a_count() as i32) * 2f64.powi(g.b_count() as i32);
    scan_size_check(assignments, cap)?;
    let graph = g.to_graph();
    let spec = covering_spec(g);
    let eval = Evaluator::new(&graph, &spec)?;
    Ok(eval.scan(g.a_all()))
}

/// Belck's condition `|T| <= |S| + Σ_C ⌊e(C,T)/2⌋` for one pair; `T` must be
/// independent.
pub fn check_belck(graph: &Graph, s: &[usize], t: &[usize]) -> Result<ConditionReport> {
    let (sm, tm) = disjoint_masks(s, t, graph.vertex_count())?;
    let adj = graph.adjacency_masks()?;
    for u in bits(tm) {
        if let Some(v) = bits(adj[u] & tm).next() {
            return Err(Error::NotIndependent(u.min(v), u.max(v)));
        }
    }
    let half_sum = belck_half_sum(&adj, full_mask(graph.vertex_count()), sm, tm);
    let lhs = tm.count_ones() as u64;
    let rhs = sm.count_ones() as u64 + half_sum;
    Ok(ConditionReport::single(sm, tm, lhs, rhs, half_sum))
}

fn belck_half_sum(adj: &[Mask], full: Mask, s: Mask, t: Mask) -> u64 {
    let mut rest = full & !(s | t);
    let mut total = 0;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        let mut edges_to_t = 0u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            edges_to_t += (adj[v] & t).count_ones() as u64;
            let new = adj[v] & rest & !comp;
            comp |= new;
            frontier |= new;
        }
        rest &= !comp;
        total += edges_to_t / 2;
    }
    total
}

/// Exhaustive search for a pair violating Belck's condition.
pub fn find_belck_violation(graph: &Graph) -> Result<ConditionReport> {
    find_belck_violation_with_cap(graph, DEFAULT_SCAN_CAP)
}

pub fn find_belck_violation_with_cap(graph: &Graph, cap: u64) -> Result<ConditionReport> {
    scan_size_check(3f64.powi(graph.vertex_count() as i32), cap)?;
    let adj = graph.adjacency_masks()?;
    let full = full_mask(graph.vertex_count());
    let mut examined = 0u64;
    let mut t: Mask = 0;
    loop {
        let independent = bits(t).all(|v| adj[v] & t == 0);
        if independent {
            let s_domain = full & !t;
            let mut s: Mask = 0;
            loop {
                examined += 1;
                let half_sum = belck_half_sum(&adj, full, s, t);
                let lhs = t.count_ones() as u64;
                let rhs = s.count_ones() as u64 + half_sum;
                if lhs > rhs {
                    let mut report = ConditionReport::single(s, t, lhs, rhs, half_sum);
                    report.pairs_examined = examined;
                    return Ok(report);
                }
                s = s.wrapping_sub(s_domain) & s_domain;
                if s == 0 {
                    break;
                }
            }
        }
        t = t.wrapping_sub(full) & full;
        if t == 0 {
            break;
        }
    }
    Ok(ConditionReport::all_clear(examined))
}

/// A 2-factor covering `A`: every A-vertex has degree 2, every B-vertex 0 or 2.
pub fn find_covering_two_factor(g: &BipartiteGraph) -> Result<Option<CycleFamily>> {
    if g.a_count() < 2 {
        return Err(Error::Precondition(format!("|A| = {} < 2", g.a_count())));
    }
    let graph = g.to_graph();
    parity_factor_via_gadget(&graph, &covering_spec(g))
}

/// A spanning 2-factor of a general graph.
pub fn find_general_two_factor(graph: &Graph) -> Result<Option<CycleFamily>> {
    if graph.vertex_count() < 2 {
        return Err(Error::Precondition(format!("|V| = {} < 2", graph.vertex_count())));
    }
    parity_factor_via_gadget(graph, &ParityFactorSpec::two_factor(graph.vertex_count()))
}

/// Reduce the factor problem to perfect matching.
///
/// Vertex `v` becomes one external node per incident edge plus `f(v)`
/// internal nodes, externals joined completely to internals. When
/// `g(v) = 0` the two internals are also joined to each other, so `v` may
/// end with degree 0. The external nodes of an edge `uv` are joined to each
/// other. In a perfect matching the edge `uv` belongs to the factor iff its
/// externals are matched to internals. Only `f(v) ∈ {0, 2}` with
/// `g(v) ∈ {0, f(v)}` is supported.
pub fn parity_factor_via_gadget(graph: &Graph, spec: &ParityFactorSpec) -> Result<Option<CycleFamily>> {
    let n = graph.vertex_count();
    if spec.len() != n {
        return Err(Error::Precondition("spec does not match graph".into()));
    }
    for v in 0..n {
        let (f, g) = (spec.f[v], spec.g[v]);
        if !(f == 0 || f == 2) || !(g == 0 || g == f) {
            return Err(Error::Precondition(format!(
                "gadget supports f ∈ {{0,2}}, g ∈ {{0,f}}; vertex {v} has g = {g}, f = {f}"
            )));
        }
    }
    let edges = graph.edges();

    // Node layout: externals first (two per edge), then internals.
    // external(e, 0) sits at the lower endpoint, external(e, 1) at the upper.
    let external = |e: usize, side: usize| 2 * e + side;
    let mut internal_start = vec![0; n + 1];
    internal_start[0] = 2 * edges.len();
    for v in 0..n {
        internal_start[v + 1] = internal_start[v] + spec.f[v] as usize;
    }
    let node_count = internal_start[n];
    let mut adj = vec![Vec::new(); node_count];
    let connect = |adj: &mut Vec<Vec<usize>>, x: usize, y: usize| {
        adj[x].push(y);
        adj[y].push(x);
    };
    for (e, &(u, v)) in edges.iter().enumerate() {
        connect(&mut adj, external(e, 0), external(e, 1));
        for (side, w) in [(0, u), (1, v)] {
            for i in internal_start[w]..internal_start[w + 1] {
                connect(&mut adj, external(e, side), i);
            }
        }
    }
    for v in 0..n {
        if spec.g[v] < spec.f[v] {
            let i = internal_start[v];
            connect(&mut adj, i, i + 1);
        }
    }

    let Some(mate) = perfect_matching(&adj) else {
        return Ok(None);
    };

    let mut chosen = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        let inward_u = mate[external(e, 0)] >= internal_start[u] && mate[external(e, 0)] < internal_start[u + 1];
        let inward_v = mate[external(e, 1)] >= internal_start[v] && mate[external(e, 1)] < internal_start[v + 1];
        assert_eq!(inward_u, inward_v, "gadget matching inconsistent at edge ({u}, {v})");
        if inward_u {
            chosen.push((u, v));
        }
    }
    let family = cycles_from_edges(n, &chosen);
    let degrees = family.degrees(n);
    for v in 0..n {
        let d = degrees[v] as u32;
        assert!(
            d >= spec.g[v] && d <= spec.f[v] && d % 2 == spec.f[v] % 2,
            "factor degree {d} at vertex {v} outside [{}, {}]",
            spec.g[v],
            spec.f[v]
        );
    }
    Ok(Some(family))
}

/// Split a subgraph with all degrees in `{0, 2}` into cycles. Each cycle
/// starts at its lowest vertex and leaves through its lower neighbor.
pub fn cycles_from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> CycleFamily {
    let mut adj = vec![Vec::new(); vertex_count];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
        assert!(list.is_empty() || list.len() == 2, "subgraph degree is not 0 or 2");
    }
    let mut visited = vec![false; vertex_count];
    let mut cycles = Vec::new();
    for start in 0..vertex_count {
        if visited[start] || adj[start].is_empty() {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        let (mut prev, mut cur) = (start, adj[start][0]);
        while cur != start {
            visited[cur] = true;
            cycle.push(cur);
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    CycleFamily::new(cycles)
}

/// Exact oracle: backtracking over edge subsets with degree pruning.
/// Requires `f(v) <= 2` so that the factor decomposes into cycles.
pub fn find_two_factor_exhaustive(graph: &Graph, spec: &ParityFactorSpec) -> Result<Option<CycleFamily>> {
    find_two_factor_exhaustive_with_cap(graph, spec, DEFAULT_EXHAUSTIVE_EDGE_CAP)
}

pub fn find_two_factor_exhaustive_with_cap(
    graph: &Graph,
    spec: &ParityFactorSpec,
    edge_cap: usize,
) -> Result<Option<CycleFamily>> {
    if graph.edge_count() > edge_cap {
        return Err(Error::SizeCap {
            what: "edges",
            size: graph.edge_count() as u64,
            cap: edge_cap as u64,
        });
    }
    if spec.len() != graph.vertex_count() {
        return Err(Error::Precondition("spec does not match graph".into()));
    }
    if let Some(v) = spec.f.iter().position(|&f| f > 2) {
        return Err(Error::Precondition(format!("f({v}) > 2: factor would not be a cycle family")));
    }
    let n = graph.vertex_count();
    let edges = graph.edges();
    let mut remaining: Vec<u32> = (0..n).map(|v| graph.degree(v) as u32).collect();
    for v in 0..n {
        if remaining[v] < spec.g[v] {
            return Ok(None);
        }
        if remaining[v] == 0 && spec.f[v] % 2 == 1 {
            return Ok(None);
        }
    }
    let mut state = Backtrack { edges: &edges, spec, degree: vec![0; n], remaining: &mut remaining, chosen: Vec::new() };
    if state.search(0) {
        Ok(Some(cycles_from_edges(n, &state.chosen)))
    } else {
        Ok(None)
    }
}

struct Backtrack<'a> {
    edges: &'a [(usize, usize)],
    spec: &'a ParityFactorSpec,
    degree: Vec<u32>,
    remaining: &'a mut Vec<u32>,
    chosen: Vec<(usize, usize)>,
}

impl Backtrack<'_> {
    fn settled_ok(&self, v: usize) -> bool {
        let d = self.degree[v];
        self.remaining[v] > 0 || (d >= self.spec.g[v] && d % 2 == self.spec.f[v] % 2)
    }

    fn search(&mut self, i: usize) -> bool {
        if i == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[i];
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        if self.degree[u] < self.spec.f[u] && self.degree[v] < self.spec.f[v] {
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.chosen.push((u, v));
            if self.settled_ok(u) && self.settled_ok(v) && self.search(i + 1) {
                return true;
            }
            self.chosen.pop();
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        let reachable = |s: &Self, w: usize| s.degree[w] + s.remaining[w] >= s.spec.g[w];
        if reachable(self, u)
            && reachable(self, v)
            && self.settled_ok(u)
            && self.settled_ok(v)
            && self.search(i + 1)
        {
            return true;
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> BipartiteGraph {
        BipartiteGraph::from_edge_list(2, 2, &[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap()
    }

    fn star() -> BipartiteGraph {
        BipartiteGraph::from_edge_list(3, 1, &[(0, 0), (1, 0), (2, 0)]).unwrap()
    }

    fn k33() -> BipartiteGraph {
        let edges: Vec<_> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        BipartiteGraph::from_edge_list(3, 3, &edges).unwrap()
    }

    #[test]
    fn covering_spec_examples() {
        let spec = covering_spec(&c4());
        assert_eq!(spec.f, vec![2, 2, 2, 2]);
        assert_eq!(spec.g, vec![2, 2, 0, 0]);
        let single = BipartiteGraph::from_edge_list(1, 0, &[]).unwrap();
        let spec = covering_spec(&single);
        assert_eq!((spec.f.clone(), spec.g.clone()), (vec![2], vec![2]));
        assert!(ParityFactorSpec::new(spec.f, spec.g).is_ok());
    }

    #[test]
    fn spec_validation() {
        assert!(ParityFactorSpec::new(vec![2], vec![1]).is_err());
        assert!(ParityFactorSpec::new(vec![1], vec![2]).is_err());
        assert!(ParityFactorSpec::new(vec![3], vec![1]).is_ok());
    }

    #[test]
    fn q_count_examples() {
        let g = c4();
        let graph = g.to_graph();
        let spec = covering_spec(&g);
        // G - a0 is the path b0 - a1 - b1 with two edges to a0.
        assert_eq!(q_count(&graph, &[], &[0], &spec).unwrap(), 0);
        assert_eq!(q_count(&graph, &[], &[], &spec).unwrap(), 0);
        let s = star();
        assert_eq!(q_count(&s.to_graph(), &[], &[0, 1], &covering_spec(&s)).unwrap(), 0);
        assert_eq!(q_count(&graph, &[0], &[0], &spec), Err(Error::Overlap(0)));
    }

    #[test]
    fn q_count_odd_g() {
        // Path 0-1-2 with g = (1, 1, 1): T = {} gives one component with g(C) = 3.
        let graph = Graph::path(3);
        let spec = ParityFactorSpec::new(vec![1, 1, 1], vec![1, 1, 1]).unwrap();
        assert_eq!(q_count(&graph, &[], &[], &spec).unwrap(), 1);
    }

    #[test]
    fn lovasz_examples() {
        let r = check_lovasz_covering(&c4(), &[], &[0]).unwrap();
        assert!(r.satisfied);
        assert_eq!((r.lhs, r.rhs), (2, 2));
        let r = check_lovasz_covering(&c4(), &[], &[]).unwrap();
        assert!(r.satisfied);
        assert_eq!((r.lhs, r.rhs), (0, 0));
        let r = check_lovasz_covering(&star(), &[], &[0, 1]).unwrap();
        assert!(!r.satisfied);
        assert_eq!((r.lhs, r.rhs), (4, 2));
        assert_eq!(r.violating_t, Some(vec![0, 1]));
    }

    #[test]
    fn lovasz_scans() {
        assert!(find_covering_lovasz_violation(&c4()).unwrap().satisfied);
        let r = find_covering_lovasz_violation(&star()).unwrap();
        assert!(!r.satisfied);
        assert!(r.lhs > r.rhs);
        let general = find_lovasz_violation(&star().to_graph(), &covering_spec(&star())).unwrap();
        assert!(!general.satisfied);
    }

    #[test]
    fn scan_cap() {
        let big = BipartiteGraph::from_neighborhoods(12, vec![0; 12]).unwrap();
        assert!(matches!(find_covering_lovasz_violation(&big), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn covering_two_factor_examples() {
        let g = c4();
        let fam = find_covering_two_factor(&g).unwrap().unwrap();
        assert_eq!(fam.cycles, vec![vec![0, 2, 1, 3]]);
        let fam = find_covering_two_factor(&k33()).unwrap().unwrap();
        assert!(fam.validate(&k33().to_graph(), true).is_ok());
        let deg = fam.degrees(6);
        assert!(deg[..3].iter().all(|&d| d == 2));
        assert_eq!(find_covering_two_factor(&star()).unwrap(), None);
    }

    #[test]
    fn exhaustive_examples() {
        let g = c4();
        let fam = find_two_factor_exhaustive(&g.to_graph(), &covering_spec(&g)).unwrap().unwrap();
        assert_eq!(fam.cycles, vec![vec![0, 2, 1, 3]]);
        let s = star();
        assert_eq!(find_two_factor_exhaustive(&s.to_graph(), &covering_spec(&s)).unwrap(), None);
    }

    #[test]
    fn belck_examples() {
        let k4 = Graph::complete(4);
        let r = check_belck(&k4, &[], &[0]).unwrap();
        assert!(r.satisfied);
        assert_eq!((r.lhs, r.rhs), (1, 1));
        assert!(check_belck(&k4, &[1], &[]).unwrap().satisfied);
        let p3 = Graph::path(3);
        let r = check_belck(&p3, &[], &[0, 2]).unwrap();
        assert!(!r.satisfied);
        assert_eq!((r.lhs, r.rhs), (2, 1));
        assert_eq!(check_belck(&p3, &[], &[0, 1]), Err(Error::NotIndependent(0, 1)));
    }

    #[test]
    fn general_two_factor_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(find_general_two_factor(&k3).unwrap().unwrap().cycles, vec![vec![0, 1, 2]]);
        let k4 = Graph::complete(4);
        let fam = find_general_two_factor(&k4).unwrap().unwrap();
        assert!(fam.validate(&k4, false).is_ok());
        assert_eq!(fam.degrees(4), vec![2; 4]);
        assert_eq!(find_general_two_factor(&Graph::path(3)).unwrap(), None);
        assert!(find_belck_violation(&k4).unwrap().satisfied);
        assert!(!find_belck_violation(&Graph::path(3)).unwrap().satisfied);
    }

    #[test]
    fn k33_oracle_over_edge_subsets() {
        // Direct enumeration of all 2^9 edge subsets.
        let g = k33();
        let edges = g.edges();
        let mut found = false;
        for subset in 0u32..(1 << edges.len()) {
            let mut da = [0; 3];
            let mut db = [0; 3];
            for (i, &(a, b)) in edges.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    da[a] += 1;
                    db[b] += 1;
                }
            }
            if da.iter().all(|&d| d == 2) && db.iter().all(|&d| d == 0 || d == 2) {
                found = true;
                break;
            }
        }
        assert!(found);
        assert!(find_covering_two_factor(&g).unwrap().is_some());
    }
}
