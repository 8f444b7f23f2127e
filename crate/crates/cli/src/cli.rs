use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "chebcurves", version, about = "Chebyshev curves of p:q triangles: equations, triples, plots and a complex SSS solver")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Do not read or write the curve cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Cache file; overrides CHEBCURVES_CACHE and the default location.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Implicit equation f_{p,q} with degree, multiplicities and code.
    Eq(EqArgs),
    /// Primitive integer triples on a curve.
    Triples(TriplesArgs),
    /// Real affine trace of a curve as SVG or CSV.
    Plot(PlotArgs),
    /// Angles of a triangle with complex sides.
    Sss(SssArgs),
    /// Curve membership and parameter recovery for a point.
    Check(CheckArgs),
    /// Order of passage through the gate points.
    Code(CodeArgs),
    /// Gate multiplicity table.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct EqArgs {
    /// Curve indices `p:q`.
    #[arg(required_unless_present = "all_upto", conflicts_with = "all_upto")]
    pub pq: Option<String>,

    /// Every coprime pair with p + q ≤ N, one per line.
    #[arg(long, value_name = "N")]
    pub all_upto: Option<u32>,

    /// Show every schedule step with predicted and measured multiplicities.
    #[arg(long)]
    pub steps: bool,
}

#[derive(Debug, Args)]
pub struct TriplesArgs {
    pub pq: String,

    /// Parameter values, e.g. `--t 3/4,3/2`.
    #[arg(long = "t", value_name = "T", value_delimiter = ',', allow_hyphen_values = true, required_unless_present = "den_max")]
    pub t: Vec<String>,

    /// All reduced fractions with denominator ≤ N in [t-min, t-max].
    #[arg(long, value_name = "N", conflicts_with = "t")]
    pub den_max: Option<u32>,

    #[arg(long, value_name = "T", allow_hyphen_values = true, default_value = "-1")]
    pub t_min: String,

    #[arg(long, value_name = "T", allow_hyphen_values = true, default_value = "1")]
    pub t_max: String,

    /// Keep only triples satisfying every triangle inequality.
    #[arg(long)]
    pub real_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChartArg {
    /// x = b/a, y = c/a
    A,
    /// x = a/c, y = b/c
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Svg,
    Csv,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    pub pq: String,

    #[arg(long, value_enum, default_value = "a")]
    pub chart: ChartArg,

    #[arg(long, value_enum, default_value = "svg")]
    pub format: FormatArg,

    #[arg(long, default_value_t = 2000)]
    pub samples: usize,

    /// Sample uniformly in t from here (requires --t-max).
    #[arg(long, requires = "t_max", allow_hyphen_values = true)]
    pub t_min: Option<f64>,

    #[arg(long, requires = "t_min", allow_hyphen_values = true)]
    pub t_max: Option<f64>,

    /// Viewport `xmin,xmax,ymin,ymax`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-4,4,-4,4")]
    pub view: Vec<f64>,

    /// Write to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SssArgs {
    /// Sides as complex literals, e.g. `3`, `1.5-0.25i`.
    #[arg(num_args = 3, allow_negative_numbers = true, allow_hyphen_values = true)]
    pub sides: Vec<String>,

    #[arg(long, default_value_t = chebcurves::triangle::DEFAULT_TOLERANCE)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub pq: String,

    /// Coordinates `a b c`, integers or fractions.
    #[arg(num_args = 3, allow_negative_numbers = true, allow_hyphen_values = true)]
    pub point: Vec<String>,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    pub pq: String,

    /// List each passage with its parameter.
    #[arg(long)]
    pub events: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Numeric row for `p:q`; the symbolic table when omitted.
    pub pq: Option<String>,
}
