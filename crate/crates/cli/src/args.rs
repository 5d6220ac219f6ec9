use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use berger_core::numerics::rational::parse_rational;
use berger_core::{Family, FamilyKind, FiberScale, Rational, TRange};

#[derive(Debug, Parser)]
#[command(name = "berger", version)]
#[command(about = "Spectra, degeneracy values and Morse indices of Berger spheres")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Admissible eigenvalue branches below a cutoff
    Spectrum {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        scale: ScaleArgs,
        /// Largest eigenvalue listed
        #[arg(long)]
        cutoff: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// First positive eigenvalue and its multiplicity
    Lambda1 {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        scale: ScaleArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Threshold and branch curves over a t-range, with degeneracy values
    Diagram {
        #[command(flatten)]
        family: FamilyArgs,
        /// start:stop:step
        #[arg(long)]
        t_range: String,
        /// Largest k drawn
        #[arg(long, default_value_t = berger_core::diagram::DEFAULT_K_LIMIT)]
        k_limit: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Degeneracy values t_0 = 1 > t_1 > ... > t_qmax
    Degeneracies {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 5)]
        qmax: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Morse index at t, or the whole step function when no t is given
    Morse {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        scale: OptionalScaleArgs,
        /// Number of jumps in the profile
        #[arg(long, default_value_t = 5)]
        qmax: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Locally rigid or bifurcation value
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        scale: ScaleArgs,
        /// Distance within which t is matched to a degeneracy value
        #[arg(long, default_value = "1e-9")]
        tolerance: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cross-check every closed form against its oracle
    Verify {
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    /// Quaternionic or complex dimension of the base (not for spin9)
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyName {
    U,
    Sp,
    Spin9,
}

impl FamilyArgs {
    pub fn family(&self) -> Result<Family> {
        let kind = match self.family {
            FamilyName::U => FamilyKind::U,
            FamilyName::Sp => FamilyKind::Sp,
            FamilyName::Spin9 => FamilyKind::Spin9,
        };
        Ok(Family::new(kind, self.n)?)
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ScaleArgs {
    /// Fiber scale t > 0
    #[arg(long)]
    pub t: Option<String>,
    /// start:stop:step
    #[arg(long)]
    pub t_range: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalScaleArgs {
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long)]
    pub t_range: Option<String>,
}

fn scales(t: Option<&str>, t_range: Option<&str>) -> Result<Vec<(Rational, FiberScale)>> {
    let ts = match (t, t_range) {
        (Some(t), None) => vec![parse_rational(t).with_context(|| format!("--t {t}"))?],
        (None, Some(r)) => r.parse::<TRange>().with_context(|| format!("--t-range {r}"))?.points(),
        _ => bail!("give exactly one of --t and --t-range"),
    };
    ts.into_iter()
        .map(|t| Ok((t.clone(), FiberScale::from_t(t)?)))
        .collect()
}

impl ScaleArgs {
    pub fn scales(&self) -> Result<Vec<(Rational, FiberScale)>> {
        scales(self.t.as_deref(), self.t_range.as_deref())
    }
}

impl OptionalScaleArgs {
    pub fn scales(&self) -> Result<Option<Vec<(Rational, FiberScale)>>> {
        if self.t.is_none() && self.t_range.is_none() {
            return Ok(None);
        }
        scales(self.t.as_deref(), self.t_range.as_deref()).map(Some)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Width of verified enclosures; also sets the printed decimals
    #[arg(long, env = "BERGER_PRECISION", default_value = "1e-12")]
    pub precision: String,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl OutputArgs {
    pub fn precision(&self) -> Result<Rational> {
        let p = parse_rational(&self.precision).with_context(|| format!("--precision {}", self.precision))?;
        if p <= Rational::from_integer(0.into()) {
            bail!("--precision must be positive, got {}", self.precision);
        }
        Ok(p)
    }
}
