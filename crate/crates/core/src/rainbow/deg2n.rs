//! Covering cycles when every B-vertex has degree 2 or `|A|`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, CycleFamily, Graph};
use crate::verify::check_dhp;

use super::paths::{path_partition_gallai_milgram, PathPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deg2nCover {
    /// A single cycle through every A-vertex, in combined vertex ids.
    pub cycle: CycleFamily,
    /// The graph on `A` formed by the degree-2 B-vertices.
    pub small_graph: Graph,
    pub partition: PathPartition,
    /// Number of B-vertices adjacent to all of `A`.
    pub large_colors: usize,
}

/// Build a cycle covering `A` in a dHp graph whose B-degrees all lie in
/// `{2, |A|}`.
///
/// The degree-2 vertices ("small colors") form a graph `H` on `A`; the
/// full-degree vertices ("large colors") number `k`. Every independent set
/// of `H` with two or more vertices only sees large colors, so `α(H) <= k`.
/// `A` is split into at most `k` paths of `H`, and consecutive paths are
/// linked through distinct large vertices.
pub fn cover_cycle_deg_2n(g: &BipartiteGraph) -> Result<Deg2nCover> {
    let n = g.a_count();
    if n < 2 {
        return Err(Error::Precondition(format!("|A| = {n} < 2")));
    }
    for b in 0..g.b_count() {
        let d = g.b_degree(b);
        if d != 2 && d != n {
            return Err(Error::Precondition(format!("B-vertex {b} has degree {d}, not 2 or {n}")));
        }
    }
    let verdict = check_dhp(g)?;
    if !verdict.holds {
        return Err(Error::Precondition(format!(
            "graph is not dHp (witness {:?})",
            verdict.witness.unwrap_or_default()
        )));
    }

    let large: Vec<usize> = (0..g.b_count()).filter(|&b| g.b_degree(b) == n).collect();
    let mut small: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for b in (0..g.b_count()).filter(|&b| g.b_degree(b) != n) {
        let m = g.b_mask(b);
        let u = m.trailing_zeros() as usize;
        let v = 63 - m.leading_zeros() as usize;
        small.entry((u, v)).or_default().push(b);
    }
    let pairs: Vec<(usize, usize)> = small.keys().copied().collect();
    let h = Graph::from_edges(n, &pairs).expect("pairs are distinct");
    let k = large.len();
    let partition = path_partition_gallai_milgram(&h, k.max(1))?;

    let small_vertex = |u: usize, v: usize, skip: usize| -> Option<usize> {
        small.get(&(u.min(v), u.max(v))).and_then(|bs| bs.get(skip).copied())
    };
    let mut cycle = Vec::with_capacity(2 * n);
    let p = partition.len();
    for (i, path) in partition.paths.iter().enumerate() {
        for (j, &a) in path.iter().enumerate() {
            cycle.push(g.a_id(a));
            if let Some(&next) = path.get(j + 1) {
                cycle.push(g.b_id(small_vertex(a, next, 0).expect("path edge is a small color")));
            }
        }
        let connector = if k > 0 {
            large[i]
        } else {
            // No large colors: one path, closed by an unused small color.
            debug_assert_eq!(p, 1);
            let (first, last) = (path[0], *path.last().unwrap());
            let skip = usize::from(n == 2);
            small_vertex(last, first, skip).ok_or_else(|| {
                Error::Contradiction("no small color left to close the Hamiltonian path".into())
            })?
        };
        cycle.push(g.b_id(connector));
    }
    Ok(Deg2nCover { cycle: CycleFamily::new(vec![cycle]), small_graph: h, partition, large_colors: k })
}
