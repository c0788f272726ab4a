//! Deciding the double Hall property.
//!
//! `N²(X)` is the set of vertices with at least two neighbors in `X`. A
//! bipartite `G(A, B)` has the property when `|A| >= 2` and
//! `|N²(X)| >= |X|` for every `X ⊆ A` with `|X| >= 2`.
//!
//! The check is exhaustive. Subsets are visited by size, then
//! lexicographically, so the first violation found is a smallest one. Since
//! `N²` is monotone under inclusion, once `|N²(X)|` reaches the size of the
//! universe no superset of `X` can fail and all of them are skipped.

use crate::error::{Error, Result};
use crate::graph::{bits, BipartiteGraph, Graph, Mask};

/// Default largest universe the exhaustive checker accepts.
pub const DEFAULT_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DhpVerdict {
    pub holds: bool,
    /// A smallest, lexicographically first `X` with `|N²(X)| < |X|`.
    pub witness: Option<Vec<usize>>,
    /// `|X| - |N²(X)|` for the witness.
    pub deficiency: Option<usize>,
    pub subsets_examined: u64,
}

/// `N²(X)` in `g`: B-vertices with at least two neighbors in `x`.
pub fn two_neighborhood(g: &BipartiteGraph, x: Mask) -> Vec<usize> {
    (0..g.b_count()).filter(|&b| (g.b_mask(b) & x).count_ones() >= 2).collect()
}

pub fn two_neighborhood_size(g: &BipartiteGraph, x: Mask) -> usize {
    count_two_neighbors(g.b_masks(), x)
}

/// `N²(X)` in a general graph; may include vertices of `X` itself.
pub fn two_neighborhood_general(adjacency: &[Mask], x: Mask) -> Vec<usize> {
    (0..adjacency.len()).filter(|&v| (adjacency[v] & x).count_ones() >= 2).collect()
}

fn count_two_neighbors(masks: &[Mask], x: Mask) -> usize {
    masks.iter().filter(|&&m| (m & x).count_ones() >= 2).count()
}

pub fn check_dhp(g: &BipartiteGraph) -> Result<DhpVerdict> {
    check_dhp_with_cap(g, DEFAULT_CAP)
}

pub fn check_dhp_with_cap(g: &BipartiteGraph, cap: usize) -> Result<DhpVerdict> {
    scan(g.a_count(), g.b_masks(), cap)
}

/// The same condition over all `X ⊆ V(G)`.
pub fn check_dhp_general(g: &Graph) -> Result<DhpVerdict> {
    check_dhp_general_with_cap(g, DEFAULT_CAP)
}

pub fn check_dhp_general_with_cap(g: &Graph, cap: usize) -> Result<DhpVerdict> {
    if g.vertex_count() > cap {
        return Err(size_cap(g.vertex_count(), cap));
    }
    let adjacency = g.adjacency_masks()?;
    scan(g.vertex_count(), &adjacency, cap)
}

fn size_cap(size: usize, cap: usize) -> Error {
    Error::SizeCap { what: "dHp universe", size: size as u64, cap: cap as u64 }
}

fn scan(universe: usize, masks: &[Mask], cap: usize) -> Result<DhpVerdict> {
    if universe < 2 {
        return Err(Error::Precondition(format!("need at least 2 vertices, got {universe}")));
    }
    if universe > cap.min(63) {
        return Err(size_cap(universe, cap.min(63)));
    }
    // One bit per subset: set once the subset, or a subset of it, saturates.
    let mut saturated = vec![0u64; (1usize << universe).div_ceil(64)];
    let is_set = |s: &[u64], x: Mask| s[(x >> 6) as usize] >> (x & 63) & 1 == 1;
    let mut examined = 0u64;

    for size in 2..=universe {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let x: Mask = combo.iter().fold(0, |m, &i| m | (1 << i));
            let dominated = size > 2 && bits(x).any(|i| is_set(&saturated, x & !(1 << i)));
            if dominated {
                saturated[(x >> 6) as usize] |= 1 << (x & 63);
            } else {
                examined += 1;
                let count = count_two_neighbors(masks, x);
                if count < size {
                    return Ok(DhpVerdict {
                        holds: false,
                        witness: Some(combo),
                        deficiency: Some(size - count),
                        subsets_examined: examined,
                    });
                }
                if count >= universe {
                    saturated[(x >> 6) as usize] |= 1 << (x & 63);
                }
            }
            if !next_combination(&mut combo, universe) {
                break;
            }
        }
    }
    Ok(DhpVerdict { holds: true, witness: None, deficiency: None, subsets_examined: examined })
}

/// Advance to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
