use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rcomp_core::CountingFamily;

use crate::error::{CliError, CliResult};
use crate::output::OutputFormat;

#[derive(Debug, Parser)]
#[command(name = "rcomp", version, about = "Count, enumerate and cross-check restricted integer compositions")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count compositions of n in a family.
    Count(CountArgs),
    /// List compositions of n in decreasing lexicographic order.
    Enumerate(EnumerateArgs),
    /// Coefficients 1..=order of the family's generating function.
    Series(SeriesArgs),
    /// Binomial terms of the Pascal-diagonal sum for s_{r,m}(n).
    Diagonal(DiagonalArgs),
    /// Cross-check every counting method over a parameter grid.
    Verify(VerifyArgs),
    /// Align families with OEIS sequences and compare terms.
    OeisCheck(OeisCheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// Unrestricted compositions.
    All,
    /// Parts congruent to r mod m.
    S,
    /// As s, with exactly k parts.
    Sk,
    /// Parts at most q.
    T,
    /// Parts at least q.
    U,
    /// Parts in [p, q].
    V,
    Tk,
    Uk,
    Vk,
}

#[derive(Clone, Debug, Default, Args)]
pub struct FamilyParams {
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
}

impl FamilyParams {
    /// Build the family, rejecting missing and inapplicable parameters.
    pub fn family(&self, kind: FamilyKind) -> CliResult<CountingFamily> {
        use FamilyKind as K;
        let needed: &[&str] = match kind {
            K::All => &[],
            K::S => &["r", "m"],
            K::Sk => &["r", "m", "k"],
            K::T | K::U => &["q"],
            K::V => &["p", "q"],
            K::Tk | K::Uk => &["q", "k"],
            K::Vk => &["p", "q", "k"],
        };
        let given = [("r", self.r), ("m", self.m), ("k", self.k), ("q", self.q), ("p", self.p)];
        for (name, value) in given {
            match (needed.contains(&name), value) {
                (true, None) => return Err(usage(format!("family {} needs --{name}", kind_name(kind)))),
                (false, Some(_)) => {
                    return Err(usage(format!("--{name} does not apply to family {}", kind_name(kind))))
                }
                _ => {}
            }
        }
        let v = |x: Option<u64>| x.unwrap_or_default();
        let family = match kind {
            K::All => CountingFamily::All,
            K::S => CountingFamily::S { r: v(self.r), m: v(self.m) },
            K::Sk => CountingFamily::Sk { r: v(self.r), m: v(self.m), k: v(self.k) },
            K::T => CountingFamily::T { q: v(self.q) },
            K::U => CountingFamily::U { q: v(self.q) },
            K::V => CountingFamily::V { p: v(self.p), q: v(self.q) },
            K::Tk => CountingFamily::Tk { q: v(self.q), k: v(self.k) },
            K::Uk => CountingFamily::Uk { q: v(self.q), k: v(self.k) },
            K::Vk => CountingFamily::Vk { p: v(self.p), q: v(self.q), k: v(self.k) },
        };
        family.validate()?;
        Ok(family)
    }
}

fn kind_name(kind: FamilyKind) -> String {
    kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recurrence,
    Closed,
    Series,
    Oracle,
    /// Every method; exit 1 if any disagree.
    All,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(value_enum)]
    pub family: FamilyKind,
    #[command(flatten)]
    pub params: FamilyParams,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
    pub method: MethodArg,
    /// Most compositions the oracle may visit.
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(value_enum)]
    pub family: FamilyKind,
    #[command(flatten)]
    pub params: FamilyParams,
    #[arg(long)]
    pub n: u64,
    /// Stop after this many compositions.
    #[arg(long)]
    pub limit: Option<u64>,
    /// Most compositions that may be produced before giving up.
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub family: FamilyKind,
    #[command(flatten)]
    pub params: FamilyParams,
    #[arg(long)]
    pub order: u64,
    /// Print "n value" lines, as in an OEIS b-file.
    #[arg(long)]
    pub bfile: bool,
}

#[derive(Debug, Args)]
pub struct DiagonalArgs {
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum GridFamily {
    /// Every family below.
    All,
    #[value(name = "c")]
    C,
    #[value(name = "s_rm")]
    SRm,
    #[value(name = "s_rmk")]
    SRmk,
    #[value(name = "t_q")]
    TQ,
    #[value(name = "u_q")]
    UQ,
    #[value(name = "v_pq")]
    VPq,
    #[value(name = "t_qk")]
    TQk,
    #[value(name = "u_qk")]
    UQk,
    #[value(name = "v_pqk")]
    VPqk,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Families to sweep, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub grid_spec: Vec<GridFamily>,
    #[arg(long, default_value_t = 18)]
    pub max_n: u64,
    /// Largest modulus for the residue families.
    #[arg(long, default_value_t = 5)]
    pub max_m: u64,
    #[arg(long, default_value_t = 6)]
    pub max_q: u64,
    #[arg(long, default_value_t = 4)]
    pub max_p: u64,
    /// Test hook: corrupt the recurrence memo at this index.
    #[arg(long, hide = true)]
    pub corrupt_memo: Option<u64>,
}

#[derive(Debug, Args)]
pub struct OeisCheckArgs {
    /// Check every catalogued family/sequence pair.
    #[arg(long, conflicts_with_all = ["id", "family"], required_unless_present = "id")]
    pub registry: bool,
    #[arg(long, requires = "family")]
    pub id: Option<String>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[command(flatten)]
    pub params: FamilyParams,
    /// Use only bundled fixtures and the local cache (the default).
    #[arg(long, conflicts_with = "fetch")]
    pub offline: bool,
    /// Download b-files missing from the cache.
    #[arg(long)]
    pub fetch: bool,
    /// Ignore the bundled fixtures.
    #[arg(long)]
    pub no_fixtures: bool,
    #[arg(long, env = "RCOMP_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, env = "RCOMP_HTTP_TIMEOUT_SECS", default_value_t = 30)]
    pub timeout_secs: u64,
    #[arg(long, env = "RCOMP_HTTP_RETRIES", default_value_t = 2)]
    pub retries: u32,
    /// Largest |shift| tried when aligning.
    #[arg(long, default_value_t = 5)]
    pub max_shift: u64,
    /// Compare terms for n = 1..=upto.
    #[arg(long, default_value_t = 50)]
    pub upto: u64,
}
