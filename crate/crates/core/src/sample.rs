//! Seeded rejection sampling of dHp instances.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample as sample_indices;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extremal::{binary_tree_dhp, BinaryTree};
use crate::graph::{full_mask, mask_of, BipartiteGraph, Mask};
use crate::verify::check_dhp;

pub const DEFAULT_RETRY_CAP: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Each B-vertex picks a degree uniformly from `2..=n`, then a uniform
    /// neighborhood of that size.
    Uniform,
    /// Each B-vertex is adjacent to two A-vertices or to all of them.
    TwoN,
    /// A random binary-tree instance, padded with random B-vertices and
    /// perturbed by extra edges. Always dHp.
    Tree,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::Uniform, Profile::TwoN, Profile::Tree];

    pub fn name(self) -> &'static str {
        match self {
            Profile::Uniform => "uniform",
            Profile::TwoN => "two-n",
            Profile::Tree => "tree",
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown profile {s:?} (expected uniform, two-n or tree)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub graph: BipartiteGraph,
    pub seed: u64,
    /// Draws until one passed, including the accepted one.
    pub attempts: u64,
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> Mask {
    sample_indices(rng, n, size).into_iter().fold(0, |m, i| m | 1 << i)
}

fn draw<R: Rng>(rng: &mut R, n: usize, b_count: usize, profile: Profile) -> Result<BipartiteGraph> {
    match profile {
        Profile::Uniform => {
            let b_adj = (0..b_count)
                .map(|_| {
                    let d = rng.gen_range(2..=n);
                    random_subset(rng, n, d)
                })
                .collect();
            BipartiteGraph::from_neighborhoods(n, b_adj)
        }
        Profile::TwoN => {
            let b_adj = (0..b_count)
                .map(|_| if rng.gen_bool(0.5) { full_mask(n) } else { random_subset(rng, n, 2) })
                .collect();
            BipartiteGraph::from_neighborhoods(n, b_adj)
        }
        Profile::Tree => {
            let tree = binary_tree_dhp(&BinaryTree::random(n, rng)?)?;
            let mut b_adj: Vec<Mask> = tree.b_masks().to_vec();
            while b_adj.len() < b_count {
                let d = rng.gen_range(2..=n);
                b_adj.push(random_subset(rng, n, d));
            }
            let extra = rng.gen_range(0..=n);
            for _ in 0..extra {
                let b = rng.gen_range(0..b_adj.len());
                b_adj[b] |= mask_of(&[rng.gen_range(0..n)]);
            }
            BipartiteGraph::from_neighborhoods(n, b_adj)
        }
    }
}

/// Draw instances until one is dHp. `b_count < n` is rejected since
/// `|N²(A)| <= |B|`. The tree profile always succeeds on the first draw.
pub fn sample_dhp(n: usize, b_count: usize, profile: Profile, seed: u64) -> Result<Sample> {
    sample_dhp_with_cap(n, b_count, profile, seed, DEFAULT_RETRY_CAP)
}

pub fn sample_dhp_with_cap(n: usize, b_count: usize, profile: Profile, seed: u64, retry_cap: u64) -> Result<Sample> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} < 2")));
    }
    if b_count < n {
        return Err(Error::Precondition(format!("b_count = {b_count} < n = {n}; dHp needs |B| >= |A|")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failed_pairs = 0u64;
    for attempt in 1..=retry_cap {
        let g = draw(&mut rng, n, b_count, profile)?;
        let verdict = check_dhp(&g)?;
        if verdict.holds {
            return Ok(Sample { graph: g, seed, attempts: attempt });
        }
        if verdict.witness.as_ref().is_some_and(|w| w.len() == 2) {
            failed_pairs += 1;
        }
    }
    Err(Error::RetryCapExceeded {
        attempts: retry_cap,
        detail: format!(
            "n={n} b={b_count} profile={profile} seed={seed}: {failed_pairs} of {retry_cap} draws failed on a pair"
        ),
    })
}

/// Seed of the `index`-th instance of a run with base seed `base`.
pub fn instance_seed(base: u64, index: u64) -> u64 {
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index)
}
