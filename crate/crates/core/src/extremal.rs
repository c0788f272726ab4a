//! Edge-count bounds for dHp graphs and the binary-tree construction that
//! nearly attains them.

use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, ColoredMultigraph, Mask};
use crate::verify::check_dhp;

/// Slack used when comparing integer edge counts with real-valued bounds.
pub const BOUND_EPS: f64 = 1e-9;

/// A rooted tree in which every internal node has exactly two children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryTree {
    children: Vec<Option<(usize, usize)>>,
    root: usize,
}

impl BinaryTree {
    /// Validate an arbitrary child list: node `i` has `children[i]`.
    pub fn from_children(children: &[Vec<usize>]) -> Result<Self> {
        let n = children.len();
        if n == 0 {
            return Err(Error::MalformedTree("empty tree".into()));
        }
        let mut parent = vec![None; n];
        let mut nodes = Vec::with_capacity(n);
        for (i, kids) in children.iter().enumerate() {
            match kids.as_slice() {
                [] => nodes.push(None),
                &[l, r] => {
                    for c in [l, r] {
                        if c >= n {
                            return Err(Error::MalformedTree(format!("child {c} out of range")));
                        }
                        if parent[c].replace(i).is_some() || c == i {
                            return Err(Error::MalformedTree(format!("node {c} has two parents")));
                        }
                    }
                    if l == r {
                        return Err(Error::MalformedTree(format!("node {i} lists child {l} twice")));
                    }
                    nodes.push(Some((l, r)));
                }
                other => {
                    return Err(Error::MalformedTree(format!(
                        "node {i} has {} children; 0 or 2 required",
                        other.len()
                    )))
                }
            }
        }
        let roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
        let &[root] = roots.as_slice() else {
            return Err(Error::MalformedTree(format!("expected one root, found {}", roots.len())));
        };
        let tree = BinaryTree { children: nodes, root };
        if tree.bfs_order().len() != n {
            return Err(Error::MalformedTree("tree is not connected".into()));
        }
        Ok(tree)
    }

    /// Balanced tree with `n` leaves; subtrees split as `⌈k/2⌉, ⌊k/2⌋`.
    pub fn balanced(n: usize) -> Result<Self> {
        Self::build(n, &mut |k| k.div_ceil(2))
    }

    /// Complete tree; `n` must be a power of two.
    pub fn complete(n: usize) -> Result<Self> {
        if !n.is_power_of_two() {
            return Err(Error::Precondition(format!("complete tree needs a power of 2 leaves, got {n}")));
        }
        Self::balanced(n)
    }

    /// Random shape: a subtree with `k` leaves splits uniformly into `i, k - i`.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Result<Self> {
        Self::build(n, &mut |k| rng.gen_range(1..k))
    }

    fn build(n: usize, split: &mut dyn FnMut(usize) -> usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("binary tree needs n >= 2 leaves, got {n}")));
        }
        fn grow(k: usize, nodes: &mut Vec<Option<(usize, usize)>>, split: &mut dyn FnMut(usize) -> usize) -> usize {
            let id = nodes.len();
            nodes.push(None);
            if k > 1 {
                let left = split(k);
                let l = grow(left, nodes, split);
                let r = grow(k - left, nodes, split);
                nodes[id] = Some((l, r));
            }
            id
        }
        let mut nodes = Vec::new();
        let root = grow(n, &mut nodes, split);
        Ok(BinaryTree { children: nodes, root })
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.children.iter().filter(|c| c.is_none()).count()
    }

    fn bfs_order(&self) -> Vec<usize> {
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.root]);
        let mut seen = vec![false; self.children.len()];
        while let Some(v) = queue.pop_front() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            order.push(v);
            if let Some((l, r)) = self.children[v] {
                queue.push_back(l);
                queue.push_back(r);
            }
        }
        order
    }
}

/// A = leaves in left-to-right order; B = internal nodes in BFS order,
/// then `y`. Each leaf is joined to all its ancestors and to `y`.
pub fn binary_tree_dhp(tree: &BinaryTree) -> Result<BipartiteGraph> {
    let n = tree.leaf_count();
    if n < 2 {
        return Err(Error::Precondition(format!("need at least 2 leaves, got {n}")));
    }
    let mut b_index = vec![usize::MAX; tree.node_count()];
    let internal: Vec<usize> = tree.bfs_order().into_iter().filter(|&v| tree.children[v].is_some()).collect();
    for (i, &v) in internal.iter().enumerate() {
        b_index[v] = i;
    }
    let y = internal.len();
    let mut masks: Vec<Mask> = vec![0; internal.len() + 1];

    // Depth-first, left child first, so leaves come out left to right.
    let mut leaf = 0;
    let mut stack = vec![(tree.root, Vec::<usize>::new())];
    while let Some((v, ancestors)) = stack.pop() {
        match tree.children[v] {
            None => {
                for &b in &ancestors {
                    masks[b] |= 1 << leaf;
                }
                masks[y] |= 1 << leaf;
                leaf += 1;
            }
            Some((l, r)) => {
                let mut below = ancestors.clone();
                below.push(b_index[v]);
                stack.push((r, below.clone()));
                stack.push((l, below));
            }
        }
    }
    BipartiteGraph::from_neighborhoods(n, masks)
}

/// `f(W) = Σ (m_i(W) - 1)` over colors `i` with at least two clique
/// vertices inside `W`.
pub fn edge_potential(m: &ColoredMultigraph, w: Mask) -> usize {
    m.cliques()
        .iter()
        .map(|&c| (c & w).count_ones() as usize)
        .filter(|&k| k >= 2)
        .map(|k| k - 1)
        .sum()
}

/// `½ n log₂ n + |B|`.
pub fn lower_bound(n: usize, b_count: usize) -> f64 {
    let n = n as f64;
    0.5 * n * n.log2() + b_count as f64
}

/// `n log₂ n + n`.
pub fn upper_bound(n: usize) -> f64 {
    let n = n as f64;
    n * n.log2() + n
}

#[derive(Clone, Debug, PartialEq)]
pub struct LowerBoundReport {
    pub holds: bool,
    pub edges: usize,
    pub bound: f64,
}

/// Compare `e(G)` with `½ n log₂ n + |B|`. Requires a dHp graph without
/// isolated vertices.
pub fn check_lower_bound(g: &BipartiteGraph) -> Result<LowerBoundReport> {
    if let Some(a) = (0..g.a_count()).find(|&a| g.a_degree(a) == 0) {
        return Err(Error::Precondition(format!("A-vertex {a} is isolated")));
    }
    if let Some(b) = (0..g.b_count()).find(|&b| g.b_degree(b) == 0) {
        return Err(Error::Precondition(format!("B-vertex {b} is isolated")));
    }
    let verdict = check_dhp(g)?;
    if !verdict.holds {
        return Err(Error::Precondition(format!(
            "graph is not dHp (witness {:?})",
            verdict.witness.unwrap_or_default()
        )));
    }
    Ok(lower_bound_report(g))
}

/// The comparison alone, without precondition checks.
pub fn lower_bound_report(g: &BipartiteGraph) -> LowerBoundReport {
    let edges = g.edge_count();
    let bound = lower_bound(g.a_count(), g.b_count());
    LowerBoundReport { holds: edges as f64 + BOUND_EPS >= bound, edges, bound }
}

/// Add a fresh B-vertex `b` and give both `u` and `v` the neighborhood
/// `N(v) ∪ {b}`. Requires `d(u) > d(v) + 2`; lowers the edge count by
/// `d(u) - d(v) - 2`.
pub fn balance_degrees(g: &BipartiteGraph, u: usize, v: usize) -> Result<BipartiteGraph> {
    for w in [u, v] {
        if w >= g.a_count() {
            return Err(Error::IndexOutOfRange { side: crate::error::Side::A, index: w, bound: g.a_count() });
        }
    }
    let (du, dv) = (g.a_degree(u), g.a_degree(v));
    if du <= dv + 2 {
        return Err(Error::Precondition(format!("need d(u) > d(v) + 2, got d(u) = {du}, d(v) = {dv}")));
    }
    let mut masks: Vec<Mask> = g
        .b_masks()
        .iter()
        .map(|&m| {
            let m = m & !(1 << u);
            if m & (1 << v) != 0 {
                m | (1 << u)
            } else {
                m
            }
        })
        .collect();
    masks.push((1 << u) | (1 << v));
    BipartiteGraph::from_neighborhoods(g.a_count(), masks)
}
