use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ck_core::verify::{default_tolerance, VerifyConfig};
use ck_core::KappaPair;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{0}")]
    Invalid(String),
    #[error("unknown tolerance name `{0}`")]
    UnknownTolerance(String),
    #[error(transparent)]
    Clap(#[from] clap::Error),
}

#[derive(Debug, Parser)]
#[command(name = "ckgeom", version, about = "Cayley-Klein geometries, Poisson-Lie structures and quantum deformations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// First contraction parameter; repeat together with --k2 for a custom grid.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k1: Vec<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k2: Vec<f64>,
    /// Deformation parameter; may be repeated.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub z: Vec<f64>,
    #[arg(long, global = true, value_enum)]
    pub grid: Option<GridName>,
    /// Samples per check (defaults to each check's own count).
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridName {
    Normalized9,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChartArg {
    Ambient,
    ParallelI,
    ParallelII,
    Polar,
}

impl From<ChartArg> for ck_core::Chart {
    fn from(c: ChartArg) -> Self {
        match c {
            ChartArg::Ambient => ck_core::Chart::Ambient,
            ChartArg::ParallelI => ck_core::Chart::ParallelI,
            ChartArg::ParallelII => ck_core::Chart::ParallelII,
            ChartArg::Polar => ck_core::Chart::Polar,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    First,
    Second,
}

impl From<KindArg> for ck_core::poisson::DeformationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::First => Self::FirstKind,
            KindArg::Second => Self::SecondKind,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DualityArg {
    #[value(name = "D0")]
    D0,
    #[value(name = "D1")]
    D1,
    #[value(name = "D2")]
    D2,
    #[value(name = "D0D1")]
    D0D1,
    #[value(name = "D0D2")]
    D0D2,
    #[value(name = "Id")]
    Id,
}

impl From<DualityArg> for ck_core::Duality {
    fn from(d: DualityArg) -> Self {
        use ck_core::Duality::*;
        match d {
            DualityArg::D0 => D0,
            DualityArg::D1 => D1,
            DualityArg::D2 => D2,
            DualityArg::D0D1 => D0D1,
            DualityArg::D0D2 => D0D2,
            DualityArg::Id => Id,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenArg {
    #[value(name = "J01")]
    J01,
    #[value(name = "J02")]
    J02,
    #[value(name = "J12")]
    J12,
}

impl From<GenArg> for ck_core::Generator {
    fn from(g: GenArg) -> Self {
        match g {
            GenArg::J01 => Self::J01,
            GenArg::J02 => Self::J02,
            GenArg::J12 => Self::J12,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Geometry, motion group and isotropy subgroups.
    Classify,
    /// Brackets of the basis, Jacobi and Casimir checks.
    Bracket,
    /// Convert a point between charts.
    Convert {
        #[arg(long, value_enum)]
        from: ChartArg,
        #[arg(long, value_enum)]
        to: ChartArg,
        /// Comma-separated coordinates (three for ambient).
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
    /// Main, subsidiary and induced metric at a point.
    Metric {
        #[arg(long, value_enum, default_value_t = ChartArg::ParallelI)]
        chart: ChartArg,
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
    /// Gaussian curvature of the main metric at a point.
    Curvature {
        #[arg(long, value_enum, default_value_t = ChartArg::ParallelI)]
        chart: ChartArg,
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
    /// Images of the basis under the generalized dualities.
    Duality {
        /// Restrict to one duality.
        #[arg(long, value_enum)]
        map: Option<DualityArg>,
    },
    /// Cocommutator, bialgebra axioms and coisotropy of the isotropy subalgebras.
    Bialgebra {
        #[arg(long, value_enum, default_value_t = KindArg::First)]
        kind: KindArg,
    },
    /// Schouten bracket and modified classical Yang-Baxter defect.
    Ybe {
        #[arg(long, value_enum, default_value_t = KindArg::First)]
        kind: KindArg,
    },
    /// Sklyanin brackets of the group coordinates at a point.
    Sklyanin {
        #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
        a1: f64,
        #[arg(long, default_value_t = 0.4, allow_hyphen_values = true)]
        a2: f64,
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        xi: f64,
    },
    /// Bracket {a1, a2} of the Poisson homogeneous space of points.
    Phs {
        #[arg(long, value_enum, default_value_t = KindArg::First)]
        kind: KindArg,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        a1: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        a2: f64,
    },
    /// Coproduct in the tensor square and its checks.
    Coproduct {
        /// Include the 9×9 matrix of this generator's coproduct.
        #[arg(long, value_enum)]
        generator: Option<GenArg>,
    },
    /// Run every verification suite.
    SweepAll,
    /// Coordinate lines of a chart in Beltrami coordinates.
    ExportGeodesics {
        #[arg(long, value_enum, default_value_t = ChartArg::ParallelI)]
        chart: ChartArg,
        #[arg(long, default_value_t = 5)]
        lines: usize,
        #[arg(long, default_value_t = 1.0)]
        extent: f64,
        #[arg(long, default_value_t = 21)]
        n: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Bracket => "bracket",
            Command::Convert { .. } => "convert",
            Command::Metric { .. } => "metric",
            Command::Curvature { .. } => "curvature",
            Command::Duality { .. } => "duality",
            Command::Bialgebra { .. } => "bialgebra",
            Command::Ybe { .. } => "ybe",
            Command::Sklyanin { .. } => "sklyanin",
            Command::Phs { .. } => "phs",
            Command::Coproduct { .. } => "coproduct",
            Command::SweepAll => "sweep-all",
            Command::ExportGeodesics { .. } => "export-geodesics",
        }
    }
}

/// Split `--tol-<name> <v>` and `--tol-<name>=<v>` out of the argument list,
/// since clap cannot declare a flag family.
pub fn extract_tolerances(args: Vec<String>) -> Result<(Vec<String>, BTreeMap<String, f64>), ConfigError> {
    let mut rest = Vec::with_capacity(args.len());
    let mut tols = BTreeMap::new();
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        let Some(spec) = a.strip_prefix("--tol-") else {
            rest.push(a);
            continue;
        };
        let (name, value) = match spec.split_once('=') {
            Some((n, v)) => (n.to_string(), v.to_string()),
            None => {
                let v = it
                    .next()
                    .ok_or_else(|| ConfigError::Invalid(format!("--tol-{spec} needs a value")))?;
                (spec.to_string(), v)
            }
        };
        if default_tolerance(&name).is_none() {
            return Err(ConfigError::UnknownTolerance(name));
        }
        let v: f64 = value
            .parse()
            .map_err(|_| ConfigError::Invalid(format!("--tol-{name}: `{value}` is not a number")))?;
        if !(v > 0.0 && v.is_finite()) {
            return Err(ConfigError::Invalid(format!("--tol-{name} must be positive")));
        }
        tols.insert(name, v);
    }
    Ok((rest, tols))
}

impl Common {
    pub fn grid(&self) -> Result<Vec<KappaPair>, ConfigError> {
        let custom = !self.k1.is_empty() || !self.k2.is_empty();
        match (self.grid, custom) {
            (Some(_), true) => Err(ConfigError::Invalid("--grid cannot be combined with --k1/--k2".into())),
            (Some(GridName::Normalized9), false) | (None, false) => Ok(KappaPair::normalized9().to_vec()),
            (None, true) => {
                if self.k1.len() != self.k2.len() {
                    return Err(ConfigError::Invalid(format!(
                        "--k1 given {} times but --k2 {} times",
                        self.k1.len(),
                        self.k2.len()
                    )));
                }
                if self.k1.iter().chain(&self.k2).any(|k| !k.is_finite()) {
                    return Err(ConfigError::Invalid("contraction parameters must be finite".into()));
                }
                Ok(self.k1.iter().zip(&self.k2).map(|(&a, &b)| KappaPair::new(a, b)).collect())
            }
        }
    }

    pub fn z_values(&self) -> Result<Vec<f64>, ConfigError> {
        if self.z.iter().any(|z| !z.is_finite()) {
            return Err(ConfigError::Invalid("--z must be finite".into()));
        }
        Ok(if self.z.is_empty() { vec![0.1] } else { self.z.clone() })
    }

    pub fn verify_config(&self, tolerances: BTreeMap<String, f64>) -> Result<VerifyConfig, ConfigError> {
        if self.samples == Some(0) {
            return Err(ConfigError::Invalid("--samples must be at least 1".into()));
        }
        Ok(VerifyConfig {
            grid: self.grid()?,
            z_values: self.z_values()?,
            samples: self.samples,
            seed: self.seed,
            tolerances,
        })
    }
}

pub fn parse_coords(s: &str) -> Result<Vec<f64>, ConfigError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| ConfigError::Invalid(format!("bad coordinate `{p}`")))
        })
        .collect()
}
