//! Counterexample search for single cycles covering `A` in dHp graphs.
//!
//! Every instance must have a 2-factor covering `A`; a missing one is a
//! contradiction. A missing covering cycle after an exhaustive search is a
//! counterexample candidate and is re-verified independently before it is
//! reported.

use std::fmt::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factors::find_covering_two_factor;
use crate::format::{emit_instance, Instance};
use crate::graph::{full_mask, BipartiteGraph, Mask};
use crate::rainbow::hamiltonian::{find_rainbow_hamiltonian_cycle_with_cap, rainbow_cycle_bruteforce, DEFAULT_CYCLE_CAP};
use crate::sample::{instance_seed, sample_dhp, Profile};
use crate::verify::{check_dhp, two_neighborhood_size};

/// Largest `n` for the permutation oracle during re-verification.
pub const REVERIFY_ORACLE_CAP: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// `samples` random instances; `n` in `n_min..=n_max`, `|B|` in
    /// `n..=n + b_extra`, profile fixed or rotating.
    Sample { samples: u64, n_min: usize, n_max: usize, b_extra: usize, profile: Option<Profile>, seed: u64 },
    /// Every multiset of `b` neighborhoods of size `>= 2` on `n` vertices,
    /// for `b` in `n..=b_max`, that is dHp.
    Exhaustive { n: usize, b_max: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub cycle_cap: usize,
    /// Cross-check every found/missing cycle against the permutation oracle
    /// up to this `n`.
    pub oracle_max_n: usize,
    /// 0 lets the pool pick.
    pub workers: usize,
}

impl SearchConfig {
    pub fn sample(samples: u64, n_min: usize, n_max: usize, seed: u64) -> Self {
        SearchConfig {
            mode: SearchMode::Sample { samples, n_min, n_max, b_extra: n_max, profile: None, seed },
            cycle_cap: DEFAULT_CYCLE_CAP,
            oracle_max_n: 6,
            workers: 0,
        }
    }

    pub fn exhaustive(n: usize, b_max: usize) -> Self {
        SearchConfig { mode: SearchMode::Exhaustive { n, b_max }, cycle_cap: DEFAULT_CYCLE_CAP, oracle_max_n: 6, workers: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub label: String,
    /// Canonical instance text.
    pub instance: String,
    pub nodes_expanded: u64,
    pub exhaustive: bool,
    /// Naive dHp re-check and, for small `n`, the permutation oracle agree.
    pub reverified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub label: String,
    pub n: usize,
    pub dhp: bool,
    pub two_factor: bool,
    pub cycle: bool,
    pub nodes_expanded: u64,
    pub oracle_checked: bool,
    pub counterexample: Option<Counterexample>,
    pub contradiction: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub mode: String,
    pub outcomes: Vec<InstanceOutcome>,
    /// Wall time; kept out of [`SearchReport::render`].
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn instances_tested(&self) -> usize {
        self.outcomes.len()
    }

    pub fn dhp_holding(&self) -> usize {
        self.outcomes.iter().filter(|o| o.dhp).count()
    }

    pub fn two_factors_found(&self) -> usize {
        self.outcomes.iter().filter(|o| o.two_factor).count()
    }

    pub fn cycles_found(&self) -> usize {
        self.outcomes.iter().filter(|o| o.cycle).count()
    }

    pub fn oracle_checks(&self) -> usize {
        self.outcomes.iter().filter(|o| o.oracle_checked).count()
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.outcomes.iter().map(|o| o.nodes_expanded).sum()
    }

    pub fn counterexamples(&self) -> Vec<&Counterexample> {
        self.outcomes.iter().filter_map(|o| o.counterexample.as_ref()).collect()
    }

    pub fn contradictions(&self) -> Vec<(&str, &str)> {
        self.outcomes
            .iter()
            .filter_map(|o| o.contradiction.as_deref().map(|c| (o.label.as_str(), c)))
            .collect()
    }

    /// Stable text document (no timings).
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "search: {}", self.mode).unwrap();
        writeln!(out, "instances_tested: {}", self.instances_tested()).unwrap();
        writeln!(out, "dhp_holding: {}", self.dhp_holding()).unwrap();
        writeln!(out, "two_factors_found: {}", self.two_factors_found()).unwrap();
        writeln!(out, "cycles_found: {}", self.cycles_found()).unwrap();
        writeln!(out, "oracle_checks: {}", self.oracle_checks()).unwrap();
        writeln!(out, "nodes_expanded: {}", self.nodes_expanded()).unwrap();
        let cex = self.counterexamples();
        writeln!(out, "counterexamples: {}", cex.len()).unwrap();
        for c in cex {
            writeln!(
                out,
                "counterexample: {} nodes_expanded={} exhaustive={} reverified={}",
                c.label, c.nodes_expanded, c.exhaustive, c.reverified
            )
            .unwrap();
            for line in c.instance.lines() {
                writeln!(out, "  {line}").unwrap();
            }
        }
        let contra = self.contradictions();
        writeln!(out, "contradictions: {}", contra.len()).unwrap();
        for (label, what) in contra {
            writeln!(out, "contradiction: {label}: {what}").unwrap();
        }
        out
    }
}

struct Job {
    label: String,
    instance: Instance,
}

fn dhp_naive(g: &BipartiteGraph) -> bool {
    let n = g.a_count();
    (0..=full_mask(n)).filter(|x: &Mask| x.count_ones() >= 2).all(|x| two_neighborhood_size(g, x) >= x.count_ones() as usize)
}

fn run_instance(job: &Job, config: &SearchConfig) -> InstanceOutcome {
    let g = &job.instance.graph;
    let n = g.a_count();
    let mut outcome = InstanceOutcome {
        label: job.label.clone(),
        n,
        dhp: false,
        two_factor: false,
        cycle: false,
        nodes_expanded: 0,
        oracle_checked: false,
        counterexample: None,
        contradiction: None,
    };
    let fail = |mut o: InstanceOutcome, what: String| {
        o.contradiction = Some(what);
        o
    };
    match check_dhp(g) {
        Ok(v) if v.holds => outcome.dhp = true,
        Ok(_) => return outcome,
        Err(e) => return fail(outcome, e.to_string()),
    }
    match find_covering_two_factor(g) {
        Ok(Some(_)) => outcome.two_factor = true,
        Ok(None) => return fail(outcome, "dHp instance without a 2-factor covering A".into()),
        Err(e) => return fail(outcome, e.to_string()),
    }
    let (stripped, origin) = g.strip_degree_le1_mapped();
    let m = match stripped.to_colored_multigraph() {
        Ok(m) => m,
        Err(e) => return fail(outcome, e.to_string()),
    };
    let search = match find_rainbow_hamiltonian_cycle_with_cap(&m, config.cycle_cap) {
        Ok(s) => s,
        Err(e) => return fail(outcome, e.to_string()),
    };
    outcome.nodes_expanded = search.nodes_expanded;
    if let Some(cycle) = &search.cycle {
        if let Err(e) = cycle.validate(&m) {
            return fail(outcome, format!("invalid rainbow cycle: {e}"));
        }
        if let Err(e) = cycle.to_bipartite_cycle(g, &origin).validate(&g.to_graph(), true) {
            return fail(outcome, format!("invalid covering cycle: {e}"));
        }
        outcome.cycle = true;
    }
    if n <= config.oracle_max_n {
        outcome.oracle_checked = true;
        if rainbow_cycle_bruteforce(&m).is_some() != outcome.cycle {
            return fail(outcome, "backtracking and permutation oracle disagree".into());
        }
    }
    if search.cycle.is_none() {
        let naive = dhp_naive(g);
        let oracle_agrees = n > REVERIFY_ORACLE_CAP || rainbow_cycle_bruteforce(&m).is_none();
        outcome.counterexample = Some(Counterexample {
            label: job.label.clone(),
            instance: emit_instance(&job.instance),
            nodes_expanded: search.nodes_expanded,
            exhaustive: search.exhaustive,
            reverified: naive && oracle_agrees,
        });
        if !(naive && oracle_agrees) {
            return fail(outcome, "counterexample candidate failed re-verification".into());
        }
    }
    outcome
}

fn sample_jobs(
    samples: u64,
    n_min: usize,
    n_max: usize,
    b_extra: usize,
    profile: Option<Profile>,
    seed: u64,
) -> Result<Vec<Job>> {
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, i);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let n = rng.gen_range(n_min..=n_max);
            let b = n + rng.gen_range(0..=b_extra);
            let p = profile.unwrap_or(Profile::ALL[(i % 3) as usize]);
            let sample = sample_dhp(n, b, p, s)?;
            let instance = Instance::new(sample.graph)
                .with_meta("generator", "sample")
                .with_meta("profile", p)
                .with_meta("seed", s);
            Ok(Job { label: format!("#{i} n={n} b={b} profile={p} seed={s}"), instance })
        })
        .collect()
}

/// All multisets of `b` masks drawn (non-decreasing) from `choices`.
fn multisets(choices: &[Mask], b: usize, start: usize, current: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
    if current.len() == b {
        out.push(current.clone());
        return;
    }
    for i in start..choices.len() {
        current.push(choices[i]);
        multisets(choices, b, i, current, out);
        current.pop();
    }
}

fn exhaustive_jobs(n: usize, b_max: usize) -> Result<Vec<Job>> {
    let choices: Vec<Mask> = (0..=full_mask(n)).filter(|m: &Mask| m.count_ones() >= 2).collect();
    let mut jobs = Vec::new();
    let mut index = 0u64;
    for b in n..=b_max {
        let mut all = Vec::new();
        multisets(&choices, b, 0, &mut Vec::new(), &mut all);
        for masks in all {
            let g = BipartiteGraph::from_neighborhoods(n, masks)?;
            let instance = Instance::new(g).with_meta("generator", "exhaustive").with_meta("index", index);
            jobs.push(Job { label: format!("#{index} n={n} b={b}"), instance });
            index += 1;
        }
    }
    Ok(jobs)
}

/// Largest exhaustive sweep accepted (number of multisets).
pub const EXHAUSTIVE_JOB_CAP: u64 = 2_000_000;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub fn search_counterexamples(config: &SearchConfig) -> Result<SearchReport> {
    let start = Instant::now();
    let max_n = match config.mode {
        SearchMode::Sample { n_min, n_max, .. } => {
            if n_min < 2 || n_min > n_max {
                return Err(Error::Precondition(format!("need 2 <= n_min <= n_max, got {n_min}..={n_max}")));
            }
            n_max
        }
        SearchMode::Exhaustive { n, b_max } => {
            if n < 2 {
                return Err(Error::Precondition(format!("n = {n} < 2")));
            }
            let kinds = (1u64 << n) - n as u64 - 1;
            let total: u64 = (n..=b_max).map(|b| binomial(kinds + b as u64 - 1, b as u64)).sum();
            if total > EXHAUSTIVE_JOB_CAP {
                return Err(Error::SizeCap { what: "exhaustive sweep instances", size: total, cap: EXHAUSTIVE_JOB_CAP });
            }
            n
        }
    };
    if max_n > config.cycle_cap {
        return Err(Error::SizeCap { what: "n for cycle search", size: max_n as u64, cap: config.cycle_cap as u64 });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Precondition(format!("worker pool: {e}")))?;
    let (mode, outcomes) = pool.install(|| -> Result<_> {
        let (mode, jobs) = match config.mode {
            SearchMode::Sample { samples, n_min, n_max, b_extra, profile, seed } => {
                let profile_name = profile.map_or("mixed".to_string(), |p| p.to_string());
                (
                    format!("sample samples={samples} n={n_min}..={n_max} b_extra={b_extra} profile={profile_name} seed={seed}"),
                    sample_jobs(samples, n_min, n_max, b_extra, profile, seed)?,
                )
            }
            SearchMode::Exhaustive { n, b_max } => {
                (format!("exhaustive n={n} b={n}..={b_max}"), exhaustive_jobs(n, b_max)?)
            }
        };
        let outcomes: Vec<InstanceOutcome> = jobs.par_iter().map(|job| run_instance(job, config)).collect();
        Ok((mode, outcomes))
    })?;
    Ok(SearchReport { mode, outcomes, elapsed: start.elapsed() })
}
