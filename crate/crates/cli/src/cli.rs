//! Command-line grammar.

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "hyperfuse", version, about = "Exact analysis of finite hypergroups and fusion rings")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write the resulting object to this file.
    #[arg(short, long)]
    pub output: Option<String>,
    /// Print the resulting object to stdout; the report goes to stderr.
    #[arg(long)]
    pub emit: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum CatalogAction {
    /// List the families and their parameters.
    List,
    /// Build a catalog object and print it as a file.
    Build {
        family: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        /// Weight parameter of `two_element`, as an exact literal.
        #[arg(long)]
        d: Option<String>,
        /// Emit the hypergroup K_F instead of the fusion ring.
        #[arg(long)]
        as_hypergroup: bool,
        #[arg(short, long)]
        output: Option<String>,
    },
}

/// Every FILE argument defaults to `-`, standard input.
#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Validate a file.
    Verify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Weights, D(K), Haar element, commutativity and group flag.
    Info {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Built-in families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Enumerate subhypergroups and their lattice.
    Subs {
        #[arg(default_value = "-")]
        input: String,
        /// Refuse hypergroups with more non-identity elements than this.
        #[arg(long, default_value_t = 20)]
        bound: usize,
    },
    /// Double-coset quotient K//L.
    Quotient {
        #[arg(default_value = "-")]
        input: String,
        /// Members of L, as labels or indices separated by commas.
        #[arg(long)]
        by: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Double cosets L\K/M.
    Cosets {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Adjoint subhypergroup and universal grading.
    Grading {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Iterated adjoint chain and nilpotency.
    Chain {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Maximal subgroup and the quotient by it.
    Unitring {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Character table of a commutative hypergroup.
    Chars {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Dual hypergroup of the characters.
    Dual {
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Markov chain of right multiplication by a probe, with simulation.
    Walk {
        #[arg(default_value = "-")]
        input: String,
        /// A label, `haar`, or a convex combination such as `1/2*g + 1/2*rho`.
        #[arg(long)]
        probe: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Starting state label (default: the identity).
        #[arg(long)]
        start: Option<String>,
        /// Independent runs with seeds seed, seed+1, ...
        #[arg(long, default_value_t = 1)]
        runs: usize,
        /// Write the trajectory as CSV here (`-` for stdout).
        #[arg(long)]
        csv: Option<String>,
    },
    /// Fusion ring to hypergroup K_F.
    Convert {
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Whether a hypergroup rescales to a fusion ring.
    Ringtest {
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Subnet index D(K)/D(H) and mu-index mu·D(K)^2.
    Index {
        input: Option<String>,
        /// Members of H inside the hypergroup read from FILE.
        #[arg(long)]
        by: Option<String>,
        #[arg(long)]
        dk: Option<String>,
        #[arg(long)]
        dh: Option<String>,
        #[arg(long, default_value = "1")]
        mu: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Info { .. } => "info",
            Command::Catalog { .. } => "catalog",
            Command::Subs { .. } => "subs",
            Command::Quotient { .. } => "quotient",
            Command::Cosets { .. } => "cosets",
            Command::Grading { .. } => "grading",
            Command::Chain { .. } => "chain",
            Command::Unitring { .. } => "unitring",
            Command::Chars { .. } => "chars",
            Command::Dual { .. } => "dual",
            Command::Walk { .. } => "walk",
            Command::Convert { .. } => "convert",
            Command::Ringtest { .. } => "ringtest",
            Command::Index { .. } => "index",
        }
    }
}
