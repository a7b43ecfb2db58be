use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Randomly perturbed graphs: generation, expansion, mixing, blobs, long paths
/// and seeded experiment sweeps.
#[derive(Debug, Parser)]
#[command(name = "smoothgraph", version)]
pub struct Cli {
    /// Print machine-readable JSON instead of a one-line summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel kernels (default: all cores).
    #[arg(long, global = true, env = "SMOOTHGRAPH_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a base graph as an edge list.
    Gen {
        /// path, cycle, star, complete, grid, binary_tree, random_tree, two_clique_bridge
        kind: String,
        n: usize,
        /// Seed for random kinds.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Add G(n, eps/n) random edges to a base graph.
    Perturb {
        graph: PathBuf,
        #[arg(long, conflicts_with = "eps_exponent", required_unless_present = "eps_exponent")]
        eps: Option<f64>,
        /// Use eps = n^-a.
        #[arg(long)]
        eps_exponent: Option<f64>,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Size, degrees, degeneracy, connectivity and diameter.
    Stats { graph: PathBuf },
    /// Exact vertex and edge expansion, or a sweep-cut upper bound.
    Expansion {
        graph: PathBuf,
        /// Largest admissible |S| / n.
        #[arg(long, default_value_t = 0.5)]
        max_frac: f64,
        /// Report only the spectral sweep-cut upper bound on edge expansion.
        #[arg(long)]
        sweep: bool,
    },
    /// Expansion profile (default) or conductance profile.
    Profile {
        graph: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Conductance profile over bands 2^-j instead of the expansion profile.
        #[arg(long)]
        conductance: bool,
        /// With --conductance: only connected sets.
        #[arg(long, requires = "conductance")]
        connected: bool,
    },
    /// Mixing time of the lazy walk with conductance bounds.
    Mix(MixArgs),
    /// Blob partition and auxiliary blob graph.
    Blobs {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Write the partition as JSON.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Long path: exact oracle or the blob heuristic.
    Longpath {
        graph: PathBuf,
        /// Exact subset DP (n <= 20).
        #[arg(long)]
        exact: bool,
        /// Blob size for the heuristic (default ceil(4/eps)).
        #[arg(long, conflicts_with = "exact")]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Connected sets containing v with |A| = a and |N(A)| = b, as codes.
    Enum {
        graph: PathBuf,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Decode a bit string instead of enumerating.
        #[arg(long, conflicts_with_all = ["a", "b"], required_unless_present_all = ["a", "b"])]
        decode: Option<String>,
    },
    /// Run an experiment config and write <prefix>.csv, .json, .timings.csv.
    Sweep {
        config: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Theorem report over a sweep's JSON result.
    Report {
        results: PathBuf,
        /// T1_1..T1_6 or P1_7; all applicable when omitted.
        #[arg(long)]
        theorem: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct MixArgs {
    pub graph: PathBuf,
    /// Exact mixing time from the dense chain (default).
    #[arg(long, conflicts_with = "estimate")]
    pub exact: bool,
    /// Monte Carlo estimate with lazy walkers.
    #[arg(long)]
    pub estimate: bool,
    #[arg(long, default_value_t = 10_000)]
    pub walkers: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub horizon: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the conductance bounds.
    #[arg(long)]
    pub no_bounds: bool,
}
