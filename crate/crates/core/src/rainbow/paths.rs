//! Independence numbers and path partitions of undirected graphs.

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Graph, Mask};

/// Largest graph the exact independence-number solver accepts.
pub const DEFAULT_ALPHA_CAP: usize = 24;

/// Largest graph for the exact minimum path cover fallback.
pub const EXACT_COVER_CAP: usize = 14;

pub fn independence_number(h: &Graph) -> Result<usize> {
    independence_number_with_cap(h, DEFAULT_ALPHA_CAP)
}

pub fn independence_number_with_cap(h: &Graph, cap: usize) -> Result<usize> {
    if h.vertex_count() > cap.min(64) {
        return Err(Error::SizeCap { what: "|V| for α", size: h.vertex_count() as u64, cap: cap.min(64) as u64 });
    }
    let adj = h.adjacency_masks()?;
    Ok(max_independent(&adj, full_mask(h.vertex_count())))
}

fn max_independent(adj: &[Mask], candidates: Mask) -> usize {
    if candidates == 0 {
        return 0;
    }
    // A vertex of degree <= 1 inside `candidates` belongs to some maximum set.
    let mut pivot = None;
    let mut pivot_degree = 0;
    for v in bits(candidates) {
        let d = (adj[v] & candidates).count_ones();
        if d <= 1 {
            return 1 + max_independent(adj, candidates & !(adj[v] | 1 << v));
        }
        if d > pivot_degree {
            pivot = Some(v);
            pivot_degree = d;
        }
    }
    let v = pivot.expect("non-empty candidate set");
    let without = max_independent(adj, candidates & !(1 << v));
    let with = 1 + max_independent(adj, candidates & !(adj[v] | 1 << v));
    without.max(with)
}

/// Vertex-disjoint paths (single vertices allowed) covering a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPartition {
    pub paths: Vec<Vec<usize>>,
}

impl PathPartition {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn validate(&self, h: &Graph) -> std::result::Result<(), String> {
        let mut seen = vec![false; h.vertex_count()];
        for path in &self.paths {
            if path.is_empty() {
                return Err("empty path".into());
            }
            for &v in path {
                if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                    return Err(format!("vertex {v} repeated or out of range"));
                }
            }
            for pair in path.windows(2) {
                if !h.has_edge(pair[0], pair[1]) {
                    return Err(format!("({}, {}) is not an edge", pair[0], pair[1]));
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(v) => Err(format!("vertex {v} not covered")),
            None => Ok(()),
        }
    }
}

/// Cover `h` by at most `budget` vertex-disjoint paths.
///
/// Starting from single vertices, two paths are joined whenever an endpoint
/// of one is adjacent to an endpoint of the other. When no join is possible
/// the paths' endpoints are pairwise non-adjacent across paths, so picking
/// one endpoint per path gives an independent set and the count is at most
/// `α(h)`. If that still exceeds `budget` an exact minimum cover is tried
/// (small graphs only) before reporting that `α(h) > budget`.
pub fn path_partition_gallai_milgram(h: &Graph, budget: usize) -> Result<PathPartition> {
    let n = h.vertex_count();
    let mut paths: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    'merge: loop {
        for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                if let Some(joined) = join(h, &paths[i], &paths[j]) {
                    paths[i] = joined;
                    paths.remove(j);
                    continue 'merge;
                }
            }
        }
        break;
    }
    if paths.len() <= budget {
        return Ok(PathPartition { paths });
    }
    if n <= EXACT_COVER_CAP {
        let exact = minimum_path_cover(h)?;
        if exact.len() <= budget {
            return Ok(exact);
        }
    }
    Err(Error::Contradiction(format!(
        "no partition into {budget} paths (greedy reached {}); independence number exceeds the budget",
        paths.len()
    )))
}

/// `p` followed by `q`, with either reversed as needed, if an endpoint of
/// `p` is adjacent to an endpoint of `q`.
fn join(h: &Graph, p: &[usize], q: &[usize]) -> Option<Vec<usize>> {
    let (p_first, p_last) = (p[0], *p.last().unwrap());
    let (q_first, q_last) = (q[0], *q.last().unwrap());
    let rev = |s: &[usize]| s.iter().rev().copied().collect::<Vec<_>>();
    let (left, right) = if h.has_edge(p_last, q_first) {
        (p.to_vec(), q.to_vec())
    } else if h.has_edge(p_last, q_last) {
        (p.to_vec(), rev(q))
    } else if h.has_edge(p_first, q_first) {
        (rev(p), q.to_vec())
    } else if h.has_edge(p_first, q_last) {
        (q.to_vec(), p.to_vec())
    } else {
        return None;
    };
    Some([left, right].concat())
}

/// Exact minimum path cover by subset dynamic programming.
pub fn minimum_path_cover(h: &Graph) -> Result<PathPartition> {
    let n = h.vertex_count();
    if n > EXACT_COVER_CAP {
        return Err(Error::SizeCap { what: "|V| for exact path cover", size: n as u64, cap: EXACT_COVER_CAP as u64 });
    }
    if n == 0 {
        return Ok(PathPartition { paths: Vec::new() });
    }
    let adj = h.adjacency_masks()?;
    let size = 1usize << n;
    // ends[S]: vertices v such that some path covers exactly S and ends at v.
    let mut ends = vec![0 as Mask; size];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for s in 1..size {
        if ends[s] == 0 {
            continue;
        }
        for v in bits(ends[s] as Mask) {
            for w in bits(adj[v] & !(s as Mask)) {
                ends[s | 1 << w] |= 1 << w;
            }
        }
    }
    // cover[S]: fewest paths covering S; choice[S]: the path through S's lowest vertex.
    let mut cover = vec![u8::MAX; size];
    let mut choice = vec![0usize; size];
    cover[0] = 0;
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut sub = rest;
        loop {
            let t = sub | low;
            if ends[t] != 0 && cover[s & !t] != u8::MAX && cover[s & !t] + 1 < cover[s] {
                cover[s] = cover[s & !t] + 1;
                choice[s] = t;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut paths = Vec::new();
    let mut s = size - 1;
    while s != 0 {
        let t = choice[s];
        paths.push(recover_path(&adj, &ends, t));
        s &= !t;
    }
    Ok(PathPartition { paths })
}

fn recover_path(adj: &[Mask], ends: &[Mask], mut set: usize) -> Vec<usize> {
    let mut v = ends[set].trailing_zeros() as usize;
    let mut path = vec![v];
    while set.count_ones() > 1 {
        let rest = set & !(1 << v);
        let prev = bits(ends[rest] & adj[v]).next().expect("predecessor exists");
        path.push(prev);
        set = rest;
        v = prev;
    }
    path.reverse();
    path
}
