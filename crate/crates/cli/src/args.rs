//! Command-line grammar.
//!
//! Vector-valued flags take JSON (`[1, [0.5, 0]]`) or the name of a scene
//! object. Space flags, `--scene`, `--tolerance`, `--csv` and `--out` are
//! accepted by every subcommand.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::scene::Chart;

#[derive(Debug, Parser)]
#[command(
    name = "tance",
    version,
    about = "Projective models of spherical and hyperbolic geometry",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalArgs {
    /// Gram matrix as JSON rows
    #[arg(long, global = true, value_name = "JSON", allow_hyphen_values = true)]
    pub gram: Option<String>,
    /// Field of the --gram space; inferred from the entries when omitted
    #[arg(long, global = true, value_enum)]
    pub field: Option<FieldArg>,
    /// Metric sign of the --gram space
    #[arg(long, global = true, value_name = "1|-1", allow_hyphen_values = true)]
    pub metric_sign: Option<i64>,
    /// Named model space (see `presets`)
    #[arg(long, global = true, value_name = "NAME")]
    pub preset: Option<String>,
    /// Scene document, or `-` for stdin
    #[arg(long, global = true, value_name = "PATH")]
    pub scene: Option<String>,
    /// Zero tolerance of the space
    #[arg(long, global = true, value_name = "FLOAT")]
    pub tolerance: Option<f64>,
    /// Write key,value rows instead of JSON
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write the result to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Spherical,
    Hyperbolic,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Signature of the form, or of the span of --span
    Signature {
        #[arg(long, value_name = "JSON", allow_hyphen_values = true)]
        span: Option<String>,
    },
    /// Orthonormal basis preserving the leading spans of a flag
    GramSchmidt {
        #[arg(long, value_name = "JSON", allow_hyphen_values = true)]
        flag: Option<String>,
        /// Reorder the vectors into a nondegenerate flag first
        #[arg(long)]
        reorder: bool,
    },
    /// Class of a point or a geodesic
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, value_name = "JSON|NAME", allow_hyphen_values = true)]
        geodesic: Option<String>,
    },
    /// Tance of two points
    Tance {
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Distance of two points
    Distance {
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Defaults to the kind selected by the metric sign
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// A geodesic: its class, span, vertices and lift
    Geodesic {
        /// Geodesic by spanning vectors
        #[arg(long, value_name = "JSON", allow_hyphen_values = true)]
        span: Option<String>,
        /// Scene geodesic
        #[arg(long)]
        name: Option<String>,
        /// Through --p and --q, or through --p along --dir
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        dir: Option<String>,
        /// Dual of a point of the Klein plane
        #[arg(long, allow_hyphen_values = true)]
        dual_of: Option<String>,
        /// Point at this arc parameter from --p (or from the span's first
        /// orthonormal vector)
        #[arg(long, allow_hyphen_values = true)]
        arc: Option<f64>,
    },
    /// Invariants, angles, area and law residuals of a triangle
    Triangle {
        /// Three points, as JSON or names
        #[arg(long, value_name = "JSON", allow_hyphen_values = true)]
        vertices: Option<String>,
        /// Scene triangle
        #[arg(long)]
        name: Option<String>,
    },
    /// Whether two configurations are related by a form-preserving map
    ConfigEqual {
        #[arg(long, value_name = "JSON|NAME", allow_hyphen_values = true)]
        c1: Option<String>,
        #[arg(long, value_name = "JSON|NAME", allow_hyphen_values = true)]
        c2: Option<String>,
    },
    /// Stereographic projection of the unit sphere from -p
    Stereo {
        /// Unit vector
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        /// Unit vector to project, or with --inverse a vector orthogonal to p
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long)]
        inverse: bool,
        /// Subsphere covector
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        /// Subsphere level, 0 or 1
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<f64>,
    },
    /// Poincaré to Klein disc map, or its inverse
    DiscMap {
        /// Disc coordinate as a number or [re, im]
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long)]
        inverse: bool,
    },
    /// SVG picture of a scene
    Plot {
        #[arg(long, value_enum)]
        chart: Option<Chart>,
        #[arg(long)]
        size: Option<u32>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Catalog of model spaces
    Presets,
}

impl Command {
    /// Whether any operand flag was given; scene requests run only without.
    pub fn has_operands(&self) -> bool {
        match self {
            Command::Signature { span } => span.is_some(),
            Command::GramSchmidt { flag, .. } => flag.is_some(),
            Command::Classify { p, geodesic } => p.is_some() || geodesic.is_some(),
            Command::Tance { p, q } | Command::Distance { p, q, .. } => p.is_some() || q.is_some(),
            Command::Geodesic {
                span,
                name,
                p,
                dual_of,
                ..
            } => span.is_some() || name.is_some() || p.is_some() || dual_of.is_some(),
            Command::Triangle { vertices, name } => vertices.is_some() || name.is_some(),
            Command::ConfigEqual { c1, c2 } => c1.is_some() || c2.is_some(),
            Command::Stereo { p, .. } => p.is_some(),
            Command::DiscMap { z, .. } => z.is_some(),
            Command::Plot { .. } | Command::Presets => true,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Signature { .. } => "signature",
            Command::GramSchmidt { .. } => "gram-schmidt",
            Command::Classify { .. } => "classify",
            Command::Tance { .. } => "tance",
            Command::Distance { .. } => "distance",
            Command::Geodesic { .. } => "geodesic",
            Command::Triangle { .. } => "triangle",
            Command::ConfigEqual { .. } => "config-equal",
            Command::Stereo { .. } => "stereo",
            Command::DiscMap { .. } => "disc-map",
            Command::Plot { .. } => "plot",
            Command::Presets => "presets",
        }
    }
}
