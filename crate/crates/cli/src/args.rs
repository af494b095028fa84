use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cayaut::{Error, GenSet, GraphOptions, Permutation, Result, Word};

#[derive(Debug, Parser)]
#[command(name = "cayaut", version, about = "Exact checks on Cay(S_n, {c, c^-1, (1 2)})")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Evaluate the five identity words behind the anchored 12-cycles.
    Relations,
    /// Count anchored cycles by depth-first search.
    Census,
    /// Automorphisms of the graph.
    Aut {
        #[arg(long, value_enum, default_value_t = AutMode::StabilizerOnly)]
        mode: AutMode,
    },
    /// Elements of S_n whose conjugation fixes the connection set.
    AutGs,
    /// Stabilizer search followed by the multiplicativity test.
    Normality,
    /// Every check, aggregated into one verdict per degree.
    VerifyTheorem {
        /// Only run claims whose name starts with this prefix; repeatable.
        #[arg(long)]
        claim: Vec<String>,
    },
    /// Write the edge list, one `a b` rank pair per line.
    DumpGraph,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Relations => "relations",
            Command::Census => "census",
            Command::Aut { .. } => "aut",
            Command::AutGs => "aut-gs",
            Command::Normality => "normality",
            Command::VerifyTheorem { .. } => "verify-theorem",
            Command::DumpGraph => "dump-graph",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AutMode {
    StabilizerOnly,
    Full,
    BruteforceOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Degree of the symmetric group.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Inclusive degree range `A..B`.
    #[arg(long, global = true, conflicts_with = "n")]
    pub n_range: Option<DegreeRange>,
    /// `standard`, `variant:i` or `custom:"(1 2);(1 2 3)"`.
    #[arg(long, global = true, default_value = "standard")]
    pub set: SetSpec,
    /// Cycle length for the census.
    #[arg(long, global = true, default_value_t = 12)]
    pub length: usize,
    /// Census anchors, `;`-separated; each is a permutation or a word in c, c-, t.
    #[arg(long, global = true)]
    pub anchors: Option<String>,
    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Memory budget for explicit graphs, in bytes.
    #[arg(long, global = true, default_value_t = 8 << 30)]
    pub memory: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Allow explicit graphs for n = 11 and 12.
    #[arg(long, global = true)]
    pub big: bool,
    /// Record wall time per claim (makes reports run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
}

impl Options {
    pub fn degrees(&self) -> Result<Vec<usize>> {
        let degrees: Vec<usize> = match (&self.n, &self.n_range) {
            (Some(n), _) => vec![*n],
            (None, Some(r)) => (r.start..=r.end).collect(),
            (None, None) => return Err(Error::Parse("one of --n or --n-range is required".into())),
        };
        if let Some(&bad) = degrees.iter().find(|&&n| n < 3) {
            return Err(Error::InvalidDegree(bad));
        }
        Ok(degrees)
    }

    pub fn degree_label(&self) -> String {
        match (&self.n, &self.n_range) {
            (Some(n), _) => n.to_string(),
            (None, Some(r)) => format!("{}..{}", r.start, r.end),
            (None, None) => String::new(),
        }
    }

    pub fn graph_options(&self) -> GraphOptions {
        let opts = GraphOptions {
            memory_budget: self.memory,
            ..GraphOptions::default()
        };
        if self.big {
            opts.big()
        } else {
            opts
        }
    }

    /// Anchors at degree `n`, with `e` added when missing.
    pub fn anchors_for(&self, set: &GenSet) -> Result<Option<Vec<Permutation>>> {
        let Some(text) = &self.anchors else {
            return Ok(None);
        };
        let n = set.degree();
        let mut out = Vec::new();
        for tok in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let p = match Permutation::parse(tok, n) {
                Ok(p) => p,
                Err(_) => tok.parse::<Word>()?.evaluate_in(set)?,
            };
            if !out.contains(&p) {
                out.push(p);
            }
        }
        if !out.iter().any(|p| p.is_identity()) {
            out.insert(0, Permutation::identity(n));
        }
        Ok(Some(out))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRange {
    pub start: usize,
    pub end: usize,
}

impl FromStr for DegreeRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let start = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
        let end = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(DegreeRange { start, end })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetSpec {
    Standard,
    Variant(usize),
    Custom(Vec<String>),
}

impl SetSpec {
    pub fn build(&self, n: usize) -> Result<GenSet> {
        match self {
            SetSpec::Standard => GenSet::standard(n),
            SetSpec::Variant(i) => GenSet::variant(n, *i),
            SetSpec::Custom(parts) => GenSet::custom(
                parts
                    .iter()
                    .map(|p| Permutation::parse(p, n))
                    .collect::<Result<_>>()?,
            ),
        }
    }

    pub fn is_custom(&self) -> bool {
        matches!(self, SetSpec::Custom(_))
    }
}

impl FromStr for SetSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "standard" {
            return Ok(SetSpec::Standard);
        }
        if let Some(i) = s.strip_prefix("variant:") {
            return i
                .trim()
                .parse()
                .map(SetSpec::Variant)
                .map_err(|_| format!("bad variant index {i:?}"));
        }
        if let Some(list) = s.strip_prefix("custom:") {
            let parts: Vec<String> = list
                .trim_matches('"')
                .split(';')
                .map(|p| p.trim().to_string())
                .filter(|p| !p.is_empty())
                .collect();
            if parts.is_empty() {
                return Err("custom set is empty".into());
            }
            return Ok(SetSpec::Custom(parts));
        }
        Err(format!("expected standard, variant:i or custom:..., got {s:?}"))
    }
}

impl std::fmt::Display for SetSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SetSpec::Standard => f.write_str("standard"),
            SetSpec::Variant(i) => write!(f, "variant:{i}"),
            SetSpec::Custom(parts) => write!(f, "custom:{}", parts.join(";")),
        }
    }
}
