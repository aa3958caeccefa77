use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "nc-freecalc", version, about = "Exact calculus of free stochastic measures")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition lattices: enumeration, structure, Möbius functions.
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Moment, cumulant and S-transform conversions.
    #[command(subcommand)]
    Transform(TransformCmd),
    /// φ(St_π) for a process.
    St(PartitionProcess),
    /// φ(Pr_π) for a process.
    Pr(PartitionProcess),
    /// Conversion tables between St_π and Pr_π.
    Tables(TablesArgs),
    /// Checks φ(St_π) = Π_B φ(Δ_|B|).
    Multiplicativity(PartitionProcess),
    /// φ(St_π) for a centered process, which vanishes on inner singletons.
    InnerSingleton(PartitionProcess),
    /// Closed forms of Pr_π for the free Brownian motion and the free Poisson process.
    Product(ProductArgs),
    /// Products of stochastic measures expanded over St_σ.
    Ito(ItoArgs),
    /// Exact finite-N expectations.
    FiniteN(FiniteNArgs),
    /// Decay of finite-N expectations against the crossing number.
    Vanishing(VanishingArgs),
    /// Cumulants of diagonal measures and moments of Δ-words.
    Diagonal(DiagonalArgs),
    /// Limits of Σ_i X_i^m1 Z_1 X_i^m2 ⋯ with Z_j free from the process.
    Sandwich(SandwichArgs),
    /// Kailath–Segall polynomials and their scalar families.
    Polys(PolysArgs),
    /// Runs verification suites; exits 3 on failure.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum PartitionsCmd {
    /// Lists P(n), NC(n) or Int(n) in restricted-growth order.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Family::Noncrossing)]
        kind: Family,
    },
    /// Structural data for one partition.
    Info {
        partition: String,
        /// Ground-set size when larger than the largest element.
        #[arg(long)]
        size: Option<usize>,
        /// Also report the k-fold thickening.
        #[arg(long)]
        thicken: Option<usize>,
        /// Also report the expansion by these run lengths, e.g. "1,2,1".
        #[arg(long)]
        expand: Option<String>,
    },
    /// Order, meet, join and direct sum of two partitions.
    Lattice { sigma: String, pi: String },
    /// μ(σ, π) on NC(n) or P(n).
    Mobius {
        sigma: String,
        pi: String,
        #[arg(long, value_enum, default_value_t = LatticeArg::Nc)]
        lattice: LatticeArg,
    },
    /// Kreweras complement of a noncrossing partition.
    Kreweras { partition: String },
    /// Minimal number of block cuts making the partition noncrossing.
    Crossing { partition: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    All,
    Noncrossing,
    Interval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LatticeArg {
    Nc,
    All,
}

#[derive(Debug, Subcommand)]
pub enum TransformCmd {
    /// Free cumulants from moments m_1, m_2, ….
    M2c { values: String },
    /// Moments from free cumulants r_1, r_2, ….
    C2m { values: String },
    /// φ(x_1 y_1 ⋯ x_n y_n) from the cumulants of x and the moments of y.
    AltMoment {
        #[arg(long)]
        x_cumulants: String,
        #[arg(long)]
        y_moments: String,
        #[arg(long)]
        n: usize,
    },
    /// S-transform from cumulants, or cumulants from S-transform coefficients.
    STransform {
        values: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Π_B m_|B| or Π_B r_|B| over the blocks of a partition.
    BlockProduct {
        partition: String,
        values: String,
        #[arg(long, value_enum, default_value_t = SeqKind::Cumulants)]
        of: SeqKind,
    },
    /// Cumulants of the time-t marginal.
    Scale {
        values: String,
        #[arg(long)]
        t: String,
    },
    /// Cumulants of the centered variable.
    Center { values: String },
    /// Cumulants of s x s for a standard semicircular s, from the moments of x.
    Sandwich { values: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqKind {
    Moments,
    Cumulants,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProcessArg {
    #[value(alias = "brownian")]
    Semicircular,
    #[value(alias = "free-poisson")]
    Poisson,
    Compound,
    Custom,
}

#[derive(Clone, Debug, Args)]
pub struct ProcessOpts {
    #[arg(long, value_enum, default_value_t = ProcessArg::Poisson)]
    pub process: ProcessArg,
    /// Time parameter |A|, as "p/q" or an integer.
    #[arg(long, default_value = "1")]
    pub t: String,
    #[arg(long)]
    pub centered: bool,
    /// Generator moments for a compound Poisson process, "m1,m2,…".
    #[arg(long)]
    pub generator: Option<String>,
    /// Per-unit-time cumulants for a custom process, "r1,r2,…".
    #[arg(long)]
    pub cumulants: Option<String>,
}

#[derive(Debug, Args)]
pub struct PartitionProcess {
    pub partition: String,
    #[command(flatten)]
    pub process: ProcessOpts,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    pub partition: String,
    #[arg(long, value_enum, default_value_t = Direction::StToPr)]
    pub direction: Direction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    StToPr,
    PrToSt,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    pub partition: String,
    #[arg(long, value_enum, default_value_t = ProcessArg::Semicircular)]
    pub process: ProcessArg,
    /// Evaluate the expectation of the closed form at this time.
    #[arg(long)]
    pub t: Option<String>,
}

#[derive(Debug, Args)]
pub struct ItoArgs {
    pub partition: String,
    #[command(flatten)]
    pub process: ProcessOpts,
    /// Lattice for the Möbius form; by default NC for noncrossing π and P otherwise.
    #[arg(long, value_enum)]
    pub lattice: Option<LatticeArg>,
}

#[derive(Debug, Args)]
pub struct FiniteNArgs {
    pub partition: String,
    /// Multiplicities k_1,…,k_n; all ones by default.
    #[arg(long)]
    pub k: Option<String>,
    /// Evaluate at this N.
    #[arg(long = "n", conflicts_with = "symbolic")]
    pub big_n: Option<u64>,
    /// Report the Laurent polynomial in N.
    #[arg(long)]
    pub symbolic: bool,
    #[command(flatten)]
    pub process: ProcessOpts,
}

#[derive(Debug, Args)]
pub struct VanishingArgs {
    pub partition: String,
}

#[derive(Debug, Args)]
pub struct DiagonalArgs {
    /// r_n(Δ_k): the cumulant order n.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// r_n(Δ_k): the diagonal index k.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Instead report φ(Δ_k1 Δ_k2 ⋯) for this word, e.g. "1,1,2".
    #[arg(long)]
    pub word: Option<String>,
    #[command(flatten)]
    pub process: ProcessOpts,
}

#[derive(Debug, Args)]
pub struct SandwichArgs {
    /// Powers m_1,…,m_{k+1}.
    #[arg(long)]
    pub powers: String,
    /// Expectations φ(Z_1),…,φ(Z_k); empty for k = 0.
    #[arg(long, default_value = "")]
    pub z: String,
    #[command(flatten)]
    pub process: ProcessOpts,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyFamily {
    General,
    Centered,
    CenteredCompositions,
    Alpha,
    Beta,
    Brownian,
    Poisson,
    PoissonCharlier,
    Compound,
}

#[derive(Debug, Args)]
pub struct PolysArgs {
    #[arg(value_enum)]
    pub family: PolyFamily,
    /// Degrees, as "n" or "a..b" (inclusive).
    #[arg(long, default_value = "0..5")]
    pub n: String,
    /// Second index for alpha and beta.
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    /// Substitute this value for t; also the process time for the Gram matrix.
    #[arg(long)]
    pub t: Option<String>,
    /// Generator moments for the compound family, "m1,m2,…".
    #[arg(long)]
    pub generator: Option<String>,
    /// Print the Gram matrix [φ(ψ_i ψ_j)] for a centered process.
    #[arg(long)]
    pub check_orthogonality: bool,
    /// Process for the Gram matrix.
    #[arg(long, value_enum, default_value_t = ProcessArg::Semicircular)]
    pub process: ProcessArg,
    /// Per-unit-time cumulants for a custom Gram-matrix process.
    #[arg(long)]
    pub cumulants: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Orthogonality,
    Mobius,
    Vanishing,
    KsConsistency,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, value_enum, default_value_t = ProcessArg::Semicircular)]
    pub process: ProcessArg,
    #[arg(long, default_value = "1")]
    pub t: String,
    #[arg(long)]
    pub generator: Option<String>,
    #[arg(long)]
    pub cumulants: Option<String>,
    /// Largest degree or ground-set size checked.
    #[arg(long)]
    pub max_n: Option<usize>,
}
