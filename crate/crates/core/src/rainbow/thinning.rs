//! Choosing one color per edge so that no color is used too often.

use crate::error::{Error, Result};
use crate::graph::ColoredMultigraph;

use super::orientation::{balanced_orientation, Multigraph};

/// Index of the pair `{u, v}` (`u != v`) among the pairs of `0..n` in
/// lexicographic order.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// `⌈½·C(Δ,2)⌉`.
pub fn usage_bound(delta: usize) -> usize {
    (delta * delta.saturating_sub(1) / 2).div_ceil(2)
}

/// The arithmetic side condition for bounded clique sizes: whenever
/// `Δ <= ¼√n`, is `⌈½·C(Δ,2)⌉ < n/64`? `None` when `Δ > ¼√n`.
pub fn sparse_usage_condition(delta: usize, n: usize) -> Option<bool> {
    // Δ <= √n / 4  ⇔  16 Δ² <= n
    if 16 * delta * delta > n {
        return None;
    }
    // ⌈x⌉ < n/64  ⇔  64 ⌈x⌉ < n
    Some(64 * usage_bound(delta) < n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinnedColoring {
    n: usize,
    /// Chosen color per pair, indexed by [`pair_index`].
    pub chosen: Vec<usize>,
    /// Number of pairs using each color.
    pub usage: Vec<usize>,
    /// `Δ`, the largest clique size.
    pub delta: usize,
    /// `⌈½·C(Δ,2)⌉`.
    pub bound: usize,
}

impl ThinnedColoring {
    pub fn color(&self, u: usize, v: usize) -> usize {
        self.chosen[pair_index(self.n, u, v)]
    }

    pub fn max_usage(&self) -> usize {
        self.usage.iter().copied().max().unwrap_or(0)
    }
}

/// Keep the two smallest colors of every edge, join them by an edge of an
/// auxiliary multigraph on the colors, orient it with
/// [`balanced_orientation`], and give each edge the color at the head of
/// its arc. A color `c` has auxiliary degree at most `C(m_c, 2)`, so it ends
/// up used at most `⌈½·C(Δ,2)⌉` times.
pub fn thin_colors(m: &ColoredMultigraph) -> Result<ThinnedColoring> {
    let n = m.vertex_count();
    let mut kept = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let colors = m.edge_colors(u, v);
            if colors.len() < 2 {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) carries {} color(s); at least 2 required",
                    colors.len()
                )));
            }
            kept.push((colors[0], colors[1]));
        }
    }
    let aux = Multigraph::new(m.color_count(), kept).expect("kept colors are distinct and in range");
    let orientation = balanced_orientation(&aux);
    let chosen: Vec<usize> = orientation.arcs.iter().map(|&(_, head)| head).collect();
    let mut usage = vec![0; m.color_count()];
    for &c in &chosen {
        usage[c] += 1;
    }
    let delta = m.max_clique_size();
    Ok(ThinnedColoring { n, chosen, usage, delta, bound: usage_bound(delta) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{binary_tree_dhp, BinaryTree};
    use crate::graph::BipartiteGraph;

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 5;
        let mut expected = 0;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(pair_index(n, u, v), expected);
                assert_eq!(pair_index(n, v, u), expected);
                expected += 1;
            }
        }
    }

    #[test]
    fn bound_values() {
        assert_eq!(usage_bound(2), 1);
        assert_eq!(usage_bound(3), 2);
        assert_eq!(usage_bound(4), 3);
        assert_eq!(usage_bound(5), 5);
    }

    #[test]
    fn delta_two_is_rainbow() {
        // Every pair of 3 vertices gets two private size-2 cliques.
        let cliques = vec![0b011, 0b011, 0b101, 0b101, 0b110, 0b110];
        let m = ColoredMultigraph::new(3, cliques).unwrap();
        let t = thin_colors(&m).unwrap();
        assert_eq!(t.bound, 1);
        assert_eq!(t.max_usage(), 1);
    }

    #[test]
    fn binary_tree_n4() {
        let g = binary_tree_dhp(&BinaryTree::complete(4).unwrap()).unwrap();
        let m = g.to_colored_multigraph().unwrap();
        let t = thin_colors(&m).unwrap();
        assert_eq!((t.delta, t.bound), (4, 3));
        assert!(t.max_usage() <= 3);
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(m.edge_colors(u, v).contains(&t.color(u, v)));
            }
        }
    }

    #[test]
    fn single_color_edge_rejected() {
        let g = BipartiteGraph::from_neighborhoods(3, vec![0b111, 0b011, 0b011]).unwrap();
        let m = g.to_colored_multigraph().unwrap();
        assert!(matches!(thin_colors(&m), Err(Error::Precondition(_))));
    }

    #[test]
    fn sparse_condition_arithmetic() {
        assert_eq!(sparse_usage_condition(3, 100), None);
        assert_eq!(sparse_usage_condition(2, 64), Some(false));
        assert_eq!(sparse_usage_condition(2, 65), Some(true));
        for n in 64..=20_000 {
            for delta in 0..=((n as f64).sqrt() as usize / 4 + 1) {
                if let Some(ok) = sparse_usage_condition(delta, n) {
                    assert_eq!(ok, !(n == 64 && delta == 2), "n = {n}, Δ = {delta}");
                }
            }
        }
    }
}
