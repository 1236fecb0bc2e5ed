use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "brauer", version, about = "Exact computations with Brauer algebras, their complexes and Tor groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Ceiling on the number of potential bar complex entries.
    #[arg(long, env = "BRAUER_BUDGET", global = true)]
    pub budget: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply elements or diagrams read from files (or a JSON stream on stdin), left to right.
    Mul(MulArgs),
    /// Homology of one of the diagram complexes.
    Homology(ComplexArgs),
    /// Export a complex as ranks and sparse boundary triplets.
    Complex(ExportArgs),
    /// Tor groups computed from the normalized bar complex.
    Tor(TorArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RingArgs {
    /// Coefficient ring: Z, Q, Fp:<p> or Zmod:<m>.
    #[arg(long, default_value = "Z")]
    pub ring: String,
    /// Loop parameter, an integer or a fraction.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub delta: String,
}

#[derive(Debug, Args)]
pub struct MulArgs {
    /// Element or diagram JSON files; `-` or no files reads stdin.
    pub files: Vec<PathBuf>,
    /// Ring, overriding any ring named in the inputs.
    #[arg(long)]
    pub ring: Option<String>,
    /// Loop parameter, overriding any value named in the inputs.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Cn,
    Cnk,
    W,
    Inductive,
}

#[derive(Debug, Clone, Args)]
pub struct ComplexArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of left-left arcs selecting a summand of C_n.
    #[arg(long)]
    pub k: Option<usize>,
    /// Filtration layer of the summand; selects the quotient F_j / F_{j-1}.
    #[arg(long)]
    pub j: Option<usize>,
    /// Size of the letter set for word complexes.
    #[arg(long)]
    pub letters: Option<usize>,
    /// Number of separators for word complexes.
    #[arg(long)]
    pub seps: Option<usize>,
    /// Comma-separated subset of 1..=n.
    #[arg(long, alias = "x-set", value_delimiter = ',')]
    pub set: Vec<usize>,
    #[arg(long)]
    pub x: Option<usize>,
    /// Builds the y-variant of the inductive complex.
    #[arg(long)]
    pub y: Option<usize>,
    /// Truncation degree of the inductive complexes.
    #[arg(long)]
    pub maxdeg: Option<usize>,
    /// Apply the trivial module over the algebra to the inductive complex.
    #[arg(long)]
    pub tensored: bool,
    #[command(flatten)]
    pub ring: RingArgs,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub complex: ComplexArgs,
    /// Include basis labels.
    #[arg(long)]
    pub labels: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Brauer,
    Sym,
}

#[derive(Debug, Args)]
pub struct TorArgs {
    #[arg(long, value_enum)]
    pub algebra: AlgebraArg,
    #[arg(long)]
    pub n: usize,
    /// trivial, induced:<m>, quotient:<a,b,...> or restricted:<N>.
    #[arg(long, default_value = "trivial")]
    pub module: String,
    /// Degrees 0 through maxdeg - 1 are reported.
    #[arg(long, default_value_t = 3)]
    pub maxdeg: usize,
    #[command(flatten)]
    pub ring: RingArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    Dimensions,
    #[value(name = "thmA")]
    ThmA,
    #[value(name = "thmB")]
    ThmB,
    #[value(name = "thm41")]
    Thm41,
    #[value(name = "thm31")]
    Thm31,
    Phi,
    Shapiro,
    #[value(name = "surjection63")]
    Surjection63,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Homological degree.
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long, alias = "x-set", value_delimiter = ',')]
    pub set: Vec<usize>,
    #[arg(long)]
    pub maxdeg: Option<usize>,
    #[command(flatten)]
    pub ring: RingArgs,
}
