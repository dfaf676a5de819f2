use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sc", version, about = "Space curves from their natural equations and successor transformations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a curve family and write its geometry
    Generate(GenerateArgs),
    /// Apply the successor transformation to a curve family
    Successor(SuccessorArgs),
    /// Run invariant suites and print one line per check
    Verify(VerifyArgs),
    /// Re-emit a previously written CSV in other formats
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Plane,
    Helix,
    SlantHelix,
    Salkowski,
    ConstantPrecession,
    CustomProfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputKind {
    Csv,
    Obj,
    Report,
}

/// Family selection, parameters and sampling. Every value may also come from
/// the file named by `SC_CONFIG`; flags take precedence.
#[derive(Debug, Clone, Default, Args)]
pub struct JobArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Amplitude of a constant-precession development
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    /// Frequency of a constant-precession development
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    /// Salkowski slope parameter
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<f64>,
    /// Constant curvature
    #[arg(long, allow_hyphen_values = true)]
    pub kappa_const: Option<f64>,
    /// Constant torsion
    #[arg(long, allow_hyphen_values = true)]
    pub tau_const: Option<f64>,
    /// Slope angle in (0, π/2)
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Constant rate of the slant-helix phase
    #[arg(long, allow_hyphen_values = true)]
    pub phi_rate: Option<f64>,
    /// CSV file with columns s, kappa, tau (custom-profile)
    #[arg(long)]
    pub profile: Option<PathBuf>,
    /// Arc-length range `a:b`
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<String>,
    /// Largest grid spacing
    #[arg(long)]
    pub step: Option<f64>,
    /// Comma-separated outputs
    #[arg(long, value_enum, value_delimiter = ',')]
    pub out: Option<Vec<OutputKind>>,
    /// Base path of written files
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Read angles and angular rates in degrees
    #[arg(long)]
    pub deg: bool,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub job: JobArgs,
    /// Phase offset of a slant helix
    #[arg(long, allow_hyphen_values = true)]
    pub phi0: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct SuccessorArgs {
    #[command(flatten)]
    pub job: JobArgs,
    /// Successor parameter; repeat for several members of the family
    #[arg(long, allow_hyphen_values = true)]
    pub phi0: Vec<f64>,
    /// Number of times the transformation is applied
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// geomcore, natural, zoo, acceptance or all
    #[arg(long, default_value = "all")]
    pub suite: String,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    /// CSV written by `generate` or `successor`
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated outputs (default obj)
    #[arg(long, value_enum, value_delimiter = ',')]
    pub out: Option<Vec<OutputKind>>,
    /// Base path of written files (default: input without extension)
    #[arg(long)]
    pub output: Option<PathBuf>,
}
