//! Command-line interface.
//!
//! Exit codes: 0 property holds or object found, 1 property fails or
//! nothing found, 2 usage or parse error, 3 size cap, 4 a result that
//! contradicts a proved statement.

use std::fmt::Display;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dot::export_dot;
use crate::error::Error;
use crate::extremal::{binary_tree_dhp, lower_bound_report, upper_bound, BinaryTree, BOUND_EPS};
use crate::factors::{find_covering_lovasz_violation, find_covering_two_factor, find_two_factor_exhaustive, covering_spec};
use crate::format::{emit_instance, parse_instance, Instance};
use crate::graph::{BipartiteGraph, CycleFamily};
use crate::rainbow::deg2n::cover_cycle_deg_2n;
use crate::rainbow::hamiltonian::{find_rainbow_hamiltonian_cycle_with_cap, DEFAULT_CYCLE_CAP};
use crate::rainbow::rainbow_path::{double_factorial_bound, find_rainbow_path, EdgeColoredGraph};
use crate::rainbow::thinning::thin_colors;
use crate::sample::{sample_dhp, Profile};
use crate::search::{search_counterexamples, SearchConfig, SearchMode};
use crate::verify::{check_dhp_with_cap, DEFAULT_CAP};

/// Default `|V|` cap for the exhaustive factor oracle.
pub const DEFAULT_ORACLE_CAP: usize = 10;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_CONTRADICTION: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "dhp", version, about = "Double Hall property graphs: verify, factor, cover, search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Uniform,
    TwoN,
    Tree,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Uniform => Profile::Uniform,
            ProfileArg::TwoN => Profile::TwoN,
            ProfileArg::Tree => Profile::Tree,
        }
    }
}

#[derive(Args, Debug)]
struct Input {
    /// Instance file, or "-" for stdin.
    input: String,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Size cap for the exact search.
    #[arg(long)]
    cap: Option<usize>,
    /// Allow --cap above the default.
    #[arg(long)]
    unsafe_cap: bool,
}

impl CapArgs {
    fn resolve(&self, default: usize) -> Result<usize, Failure> {
        match self.cap {
            Some(c) if c > default && !self.unsafe_cap => {
                Err(Failure::usage(format!("--cap {c} exceeds the default {default}; add --unsafe-cap")))
            }
            Some(c) => Ok(c),
            None => Ok(default),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the double Hall property.
    CheckDhp {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Find a 2-factor covering A.
    TwoFactor {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        cap: CapArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Search for a single cycle covering A.
    FindCycle {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        cap: CapArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Covering cycle for graphs whose B-degrees are all 2 or |A|.
    CoverDeg2n {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Pick one color per pair with bounded color usage.
    ThinColors {
        #[command(flatten)]
        input: Input,
    },
    /// Rainbow path of length l in an edge-colored complete graph.
    RainbowPath {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Vertex count (default n0(k, l)).
        #[arg(long)]
        n: Option<usize>,
        /// Random coloring with this many colors instead of a proper one.
        #[arg(long)]
        colors: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Binary-tree instance with n leaves.
    GenTree {
        #[arg(long)]
        n: usize,
        /// Random tree shape (otherwise complete; n must be a power of 2).
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Sample a random dHp instance.
    Sample {
        #[arg(long)]
        n: usize,
        /// |B| (default n).
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, value_enum, default_value_t = ProfileArg::Uniform)]
        profile: ProfileArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Search for dHp graphs without a cycle covering A.
    Search {
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// |B| ranges over n..=n+b_extra.
        #[arg(long, default_value_t = 4)]
        b_extra: usize,
        /// Fixed profile (default: rotate through all).
        #[arg(long, value_enum)]
        profile: Option<ProfileArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate every instance with this |A| instead of sampling.
        #[arg(long)]
        exhaustive_n: Option<usize>,
        /// Largest |B| for the exhaustive sweep.
        #[arg(long, default_value_t = 5)]
        b_max: usize,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Edge count against the lower and upper bounds.
    Bounds {
        #[command(flatten)]
        input: Input,
    },
    /// Graphviz document, optionally with a covering 2-factor highlighted.
    ExportDot {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        factor: bool,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeCap { .. } => EXIT_CAP,
            Error::Contradiction(_) => EXIT_CONTRADICTION,
            Error::Precondition(_) | Error::RetryCapExceeded { .. } | Error::DegreeTooSmall { .. } => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

/// `key: value` lines in insertion order.
#[derive(Default)]
struct Doc(String);

impl Doc {
    fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.0.push_str(&format!("{key}: {value}\n"));
        self
    }
}

fn list(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn vertex_name(g: &BipartiteGraph, v: usize) -> String {
    if v < g.a_count() {
        format!("a{v}")
    } else {
        format!("b{}", v - g.a_count())
    }
}

fn cycle_lines(doc: &mut Doc, g: &BipartiteGraph, family: &CycleFamily) {
    doc.field("cycles", family.cycles.len());
    for c in &family.cycles {
        doc.field("cycle", c.iter().map(|&v| vertex_name(g, v)).collect::<Vec<_>>().join(" "));
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<Instance, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))?
    };
    parse_instance(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.code = EXIT_USAGE;
        f.message = format!("{path}: {}", f.message);
        f
    })
}

/// Run the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut stderr = String::new();
    match dispatch(cli.command, stdin, &mut stderr) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr },
        Err(f) => {
            stderr.push_str(&format!("error: {}\n", f.message));
            Outcome { code: f.code, stdout: String::new(), stderr }
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, stderr: &mut String) -> Result<(i32, String), Failure> {
    match command {
        Command::CheckDhp { input, cap } => {
            let cap = cap.resolve(DEFAULT_CAP)?;
            let inst = read_input(&input.input, stdin)?;
            let v = check_dhp_with_cap(&inst.graph, cap)?;
            let mut doc = Doc::default();
            doc.field("a", inst.graph.a_count()).field("b", inst.graph.b_count()).field("holds", v.holds);
            if let (Some(w), Some(d)) = (&v.witness, v.deficiency) {
                doc.field("witness", list(w)).field("deficiency", d);
            }
            doc.field("subsets_examined", v.subsets_examined);
            Ok((if v.holds { EXIT_OK } else { EXIT_FAIL }, doc.0))
        }
        Command::TwoFactor { input, cap, format } => {
            let cap = cap.resolve(DEFAULT_ORACLE_CAP)?;
            let inst = read_input(&input.input, stdin)?;
            let g = &inst.graph;
            let dhp = check_dhp_with_cap(g, DEFAULT_CAP)?.holds;
            let factor = find_covering_two_factor(g)?;
            let oracle = if g.vertex_count() <= cap {
                Some(find_two_factor_exhaustive(&g.to_graph(), &covering_spec(g))?.is_some())
            } else {
                None
            };
            if let Some(o) = oracle {
                if o != factor.is_some() {
                    return Err(Error::Contradiction("gadget and exhaustive oracle disagree".into()).into());
                }
            }
            if factor.is_none() && dhp {
                return Err(Error::Contradiction("dHp graph without a 2-factor covering A".into()).into());
            }
            if format == OutputFormat::Dot {
                return Ok((if factor.is_some() { EXIT_OK } else { EXIT_FAIL }, export_dot(g, factor.as_ref())));
            }
            let mut doc = Doc::default();
            doc.field("dhp", dhp).field("found", factor.is_some());
            doc.field("oracle", oracle.map_or("skipped".to_string(), |o| o.to_string()));
            match &factor {
                Some(f) => cycle_lines(&mut doc, g, f),
                None => {
                    let r = find_covering_lovasz_violation(g)?;
                    if r.satisfied {
                        return Err(Error::Contradiction("no factor, yet the parity condition holds".into()).into());
                    }
                    doc.field("certificate", "lovasz")
                        .field("s", list(r.violating_s.as_deref().unwrap_or_default()))
                        .field("t", list(r.violating_t.as_deref().unwrap_or_default()))
                        .field("lhs", r.lhs)
                        .field("rhs", r.rhs);
                }
            }
            Ok((if factor.is_some() { EXIT_OK } else { EXIT_FAIL }, doc.0))
        }
        Command::FindCycle { input, cap, format } => {
            let cap = cap.resolve(DEFAULT_CYCLE_CAP)?;
            let inst = read_input(&input.input, stdin)?;
            let g = &inst.graph;
            let (stripped, origin) = g.strip_degree_le1_mapped();
            let m = stripped.to_colored_multigraph()?;
            let search = find_rainbow_hamiltonian_cycle_with_cap(&m, cap)?;
            let family = search.cycle.as_ref().map(|c| c.to_bipartite_cycle(g, &origin));
            let code = if family.is_some() { EXIT_OK } else { EXIT_FAIL };
            if format == OutputFormat::Dot {
                return Ok((code, export_dot(g, family.as_ref())));
            }
            let mut doc = Doc::default();
            doc.field("found", family.is_some());
            if let Some(c) = &search.cycle {
                doc.field("order", list(&c.vertices)).field("colors", list(&c.colors.iter().map(|&c| origin[c]).collect::<Vec<_>>()));
            }
            if let Some(f) = &family {
                cycle_lines(&mut doc, g, f);
            }
            doc.field("nodes_expanded", search.nodes_expanded).field("exhaustive", search.exhaustive);
            Ok((code, doc.0))
        }
        Command::CoverDeg2n { input, format } => {
            let inst = read_input(&input.input, stdin)?;
            let g = &inst.graph;
            let cover = cover_cycle_deg_2n(g)?;
            cover
                .cycle
                .validate(&g.to_graph(), true)
                .map_err(|e| Failure::from(Error::Contradiction(format!("invalid cover: {e}"))))?;
            if format == OutputFormat::Dot {
                return Ok((EXIT_OK, export_dot(g, Some(&cover.cycle))));
            }
            let mut doc = Doc::default();
            doc.field("large_colors", cover.large_colors)
                .field("small_edges", cover.small_graph.edge_count())
                .field("paths", cover.partition.len());
            for p in &cover.partition.paths {
                doc.field("path", list(p));
            }
            cycle_lines(&mut doc, g, &cover.cycle);
            Ok((EXIT_OK, doc.0))
        }
        Command::ThinColors { input } => {
            let inst = read_input(&input.input, stdin)?;
            let (stripped, origin) = inst.graph.strip_degree_le1_mapped();
            let m = stripped.to_colored_multigraph()?;
            let t = thin_colors(&m)?;
            let mut doc = Doc::default();
            doc.field("delta", t.delta).field("bound", t.bound).field("max_usage", t.max_usage());
            let n = m.vertex_count();
            for u in 0..n {
                for v in u + 1..n {
                    doc.field(&format!("pair {u} {v}"), origin[t.color(u, v)]);
                }
            }
            if t.max_usage() > t.bound {
                return Err(Error::Contradiction(format!("usage {} exceeds bound {}", t.max_usage(), t.bound)).into());
            }
            Ok((EXIT_OK, doc.0))
        }
        Command::RainbowPath { k, l, n, colors, seed } => {
            let n0 = double_factorial_bound(k as u64, l as u64);
            let n = match n {
                Some(n) => n,
                None if n0 <= 64 => n0 as usize,
                None => return Err(Error::SizeCap { what: "n0(k, l)", size: n0.min(u64::MAX as u128) as u64, cap: 64 }.into()),
            };
            if n > 64 {
                return Err(Error::SizeCap { what: "n", size: n as u64, cap: 64 }.into());
            }
            let gc = match colors {
                None => EdgeColoredGraph::proper_complete(n),
                Some(0) => return Err(Failure::usage("--colors must be positive")),
                Some(c) => {
                    use rand::Rng;
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let edges: Vec<_> =
                        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).map(|(u, v)| (u, v, rng.gen_range(0..c))).collect();
                    EdgeColoredGraph::new(n, &edges)?
                }
            };
            let r = find_rainbow_path(&gc, k, l)?;
            let verified = r.condition_verified.map_or("unchecked".to_string(), |v| v.to_string());
            let mut doc = Doc::default();
            doc.field("n", n).field("n0", n0).field("condition", verified).field("found", r.path.is_some());
            if let Some(p) = &r.path {
                p.validate(&gc).map_err(|e| Failure::from(Error::Contradiction(format!("invalid path: {e}"))))?;
                doc.field("vertices", list(&p.vertices)).field("colors", list(&p.colors));
                return Ok((EXIT_OK, doc.0));
            }
            if r.condition_verified == Some(true) {
                return Err(Error::Contradiction("span condition holds but no rainbow path was found".into()).into());
            }
            Ok((EXIT_FAIL, doc.0))
        }
        Command::GenTree { n, random, seed, format } => {
            let tree = if random {
                BinaryTree::random(n, &mut ChaCha8Rng::seed_from_u64(seed))
            } else {
                BinaryTree::complete(n)
            }
            .map_err(|e| Failure::usage(e.to_string()))?;
            let g = binary_tree_dhp(&tree)?;
            if format == OutputFormat::Dot {
                return Ok((EXIT_OK, export_dot(&g, None)));
            }
            let mut inst = Instance::new(g).with_meta("generator", if random { "random-tree" } else { "complete-tree" });
            if random {
                inst = inst.with_meta("seed", seed);
            }
            Ok((EXIT_OK, emit_instance(&inst)))
        }
        Command::Sample { n, b, profile, seed, format } => {
            let profile = Profile::from(profile);
            let s = sample_dhp(n, b.unwrap_or(n), profile, seed).map_err(|e| match e {
                Error::Precondition(m) => Failure::usage(m),
                e => e.into(),
            })?;
            stderr.push_str(&format!("attempts: {}\n", s.attempts));
            if format == OutputFormat::Dot {
                return Ok((EXIT_OK, export_dot(&s.graph, None)));
            }
            let inst = Instance::new(s.graph).with_meta("generator", "sample").with_meta("profile", profile).with_meta("seed", seed);
            Ok((EXIT_OK, emit_instance(&inst)))
        }
        Command::Search { samples, n_min, n_max, b_extra, profile, seed, exhaustive_n, b_max, workers, cap } => {
            let cycle_cap = cap.resolve(DEFAULT_CYCLE_CAP)?;
            let mode = match exhaustive_n {
                Some(n) => SearchMode::Exhaustive { n, b_max },
                None => SearchMode::Sample { samples, n_min, n_max, b_extra, profile: profile.map(Profile::from), seed },
            };
            let config = SearchConfig { mode, cycle_cap, oracle_max_n: 6, workers };
            let report = search_counterexamples(&config)?;
            stderr.push_str(&format!("elapsed_ms: {}\n", report.elapsed.as_millis()));
            let code = if !report.contradictions().is_empty() {
                EXIT_CONTRADICTION
            } else if !report.counterexamples().is_empty() {
                EXIT_FAIL
            } else {
                EXIT_OK
            };
            Ok((code, report.render()))
        }
        Command::Bounds { input } => {
            let inst = read_input(&input.input, stdin)?;
            let g = &inst.graph;
            let dhp = check_dhp_with_cap(g, DEFAULT_CAP)?.holds;
            let isolated = (0..g.a_count()).any(|a| g.a_degree(a) == 0) || (0..g.b_count()).any(|b| g.b_degree(b) == 0);
            let r = lower_bound_report(g);
            let upper = upper_bound(g.a_count());
            let mut doc = Doc::default();
            doc.field("a", g.a_count())
                .field("b", g.b_count())
                .field("edges", r.edges)
                .field("dhp", dhp)
                .field("lower_bound", format!("{:.6}", r.bound))
                .field("lower_holds", r.holds)
                .field("upper_bound", format!("{:.6}", upper))
                .field("within_upper", r.edges as f64 <= upper + BOUND_EPS);
            if !dhp || isolated {
                doc.field("applicable", false);
                return Ok((EXIT_FAIL, doc.0));
            }
            if !r.holds {
                return Err(Error::Contradiction(format!("dHp graph with {} edges below {:.6}", r.edges, r.bound)).into());
            }
            doc.field("applicable", true);
            Ok((EXIT_OK, doc.0))
        }
        Command::ExportDot { input, factor } => {
            let inst = read_input(&input.input, stdin)?;
            let family = if factor { find_covering_two_factor(&inst.graph)? } else { None };
            Ok((EXIT_OK, export_dot(&inst.graph, family.as_ref())))
        }
    }
}
