use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "vcg",
    version,
    about = "Integral cohomology of (Z_a⋊Z_b)⋊Z and [Z_a⋊(Z_b×Q_{2^i})]⋊Z",
    long_about = None
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology groups H^0 .. H^N.
    Compute(ComputeArgs),
    /// Ring generators and all products up to a degree bound.
    Ring(ComputeArgs),
    /// Period of the cohomology of an infinite group and its class.
    Period(GroupArgs),
    /// Compare the closed forms with the resolution-based oracle.
    Verify(VerifyArgs),
    /// Smith normal form of an integer matrix such as "[[2,4],[0,4]]".
    Snf(SnfArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Z_m (finite).
    Cyclic,
    /// Z_a ⋊ Z_b (finite).
    Metacyclic,
    /// Q_{2^i} (finite).
    Q,
    /// Z_b × Q_{2^i} (finite).
    Zbq,
    /// Z_a ⋊ (Z_b × Q_{2^i}) (finite).
    Zazbq,
    /// (Z_a ⋊ Z_b) ⋊ Z.
    Zazbz,
    /// [Z_a ⋊ (Z_b × Q_{2^i})] ⋊ Z.
    Zazbqz,
}

impl FamilyArg {
    pub fn name(self) -> &'static str {
        match self {
            FamilyArg::Cyclic => "cyclic",
            FamilyArg::Metacyclic => "metacyclic",
            FamilyArg::Q => "q",
            FamilyArg::Zbq => "zbq",
            FamilyArg::Zazbq => "zazbq",
            FamilyArg::Zazbz => "zazbz",
            FamilyArg::Zazbqz => "zazbqz",
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, FamilyArg::Zazbz | FamilyArg::Zazbqz)
    }
}

#[derive(Clone, Debug, Args)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Order of the cyclic group.
    #[arg(short = 'm')]
    pub m: Option<u64>,
    #[arg(short = 'a')]
    pub a: Option<u64>,
    #[arg(short = 'b')]
    pub b: Option<u64>,
    /// 1_b acts on Z_a by multiplication by r.
    #[arg(short = 'r')]
    pub r: Option<u64>,
    /// Quaternion exponent: Q_{2^i}.
    #[arg(short = 'i')]
    pub i: Option<u32>,
    #[arg(long = "rx")]
    pub r_x: Option<u64>,
    #[arg(long = "ry")]
    pub r_y: Option<u64>,
    /// Twist: 1_b ↦ c·1_a + c_b·1_b.
    #[arg(long = "c")]
    pub c: Option<u64>,
    #[arg(long = "ca")]
    pub c_a: Option<u64>,
    #[arg(long = "cb")]
    pub c_b: Option<u64>,
    #[arg(long = "cx")]
    pub c_x: Option<u64>,
    #[arg(long = "cy")]
    pub c_y: Option<u64>,
    /// Twist on Q: x ↦ x^k (k odd).
    #[arg(short = 'k')]
    pub k: Option<u64>,
    /// Twist on Q: y ↦ x^ℓ y.
    #[arg(short = 'l')]
    pub ell: Option<u64>,
    /// General Q_8 twist: x ↦ x^S y^T, given as S,T.
    #[arg(long = "x-image", value_parser = parse_image, requires = "y_image")]
    pub x_image: Option<(u64, u8)>,
    /// General Q_8 twist: y ↦ x^S y^T, given as S,T.
    #[arg(long = "y-image", value_parser = parse_image, requires = "x_image")]
    pub y_image: Option<(u64, u8)>,
    /// Largest group order enumerated when checking the twist.
    #[arg(long = "max-order", default_value_t = 512)]
    pub max_order: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Highest degree shown.
    #[arg(short = 'N', long = "degree")]
    pub bound: Option<u64>,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    /// Run one kind of check: groups, twisted, action, fz, ring, cup, period.
    #[arg(long)]
    pub only: Option<String>,
    /// Restrict to one family (both finite and infinite members).
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Sampled specs per family for cup and period checks.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Inject a wrong gcd into the formulas (harness self-test).
    #[arg(long)]
    pub perturb: bool,
    /// Largest finite group handed to the oracle.
    #[arg(long = "max-order", default_value_t = 32)]
    pub max_order: usize,
    /// Highest degree compared against the oracle.
    #[arg(long = "max-degree", default_value_t = 6)]
    pub max_degree: usize,
    /// Worker threads (overrides VCG_THREADS).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Run the checks one after another.
    #[arg(long)]
    pub sequential: bool,
    /// List every check, not only mismatches and skips.
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Debug, Args)]
pub struct SnfArgs {
    /// Matrix as nested JSON arrays; "-" reads it from stdin.
    pub matrix: String,
    #[arg(long)]
    pub json: bool,
}

fn parse_image(s: &str) -> Result<(u64, u8), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected S,T but got {s:?}"))?;
    let x = x.trim().parse().map_err(|e| format!("{x:?}: {e}"))?;
    let y = y.trim().parse().map_err(|e| format!("{y:?}: {e}"))?;
    Ok((x, y))
}
