use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hypgrowth", version, about = "Growth series and growth rates of hyperbolic Coxeter polyhedra")]
pub struct Cli {
    /// Decimal places for growth rates.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=200))]
    pub digits: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Steinberg,
    Parry,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Growth function, virgin form, growth rate and its class.
    Growth {
        /// Polyhedron or Coxeter matrix JSON (`-` for standard input).
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Growth rate and its class.
    Rate { file: PathBuf },
    /// Salem/Pisot classification of an integer polynomial.
    ClassifyPoly {
        /// `[c0, c1, ...]` or `1 - 8*t + t^2`.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Validation and the Andreev conditions (exit 2 on failure).
    Check { file: PathBuf },
    /// Ridges with their types.
    Ridges { file: PathBuf },
    /// Contracts a ridge to an ideal 4-valent vertex.
    Contract {
        file: PathBuf,
        #[arg(long)]
        edge: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replaces an ideal 4-valent vertex by an edge.
    Insert {
        file: PathBuf,
        #[arg(long)]
        vertex: u32,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        mode: u8,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        label: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Growth rates along the deformation of a ridge label, with the limit.
    Sweep {
        file: PathBuf,
        #[arg(long)]
        edge: String,
        #[arg(long = "from", value_parser = clap::value_parser!(u32).range(2..))]
        from: u32,
        #[arg(long = "to")]
        to: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
        jobs: u32,
    },
    /// Writes a polyhedron of a standard family.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Compares word-length sphere sizes with the series coefficients.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Cap on stored group elements.
        #[arg(long, default_value_t = hypgrowth_core::coxeter::DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum Family {
    /// Dodecahedron, one edge labelled m, the rest right.
    Dodecahedron(DodecahedronArgs),
    /// Right-angled Löbell polyhedron L(n).
    Loebell(LoebellArgs),
    /// L(n) with every vertical ridge contracted.
    LoebellIdeal(LoebellArgs),
    /// Lambert cube with essential labels p, q, r.
    Lambert(LambertArgs),
    /// Dodecahedron with one ideal 3-valent vertex.
    Ideal3Dodecahedron,
    /// Cube with every edge labelled m.
    Cube(CubeArgs),
    /// Prism over a k-gon, every edge labelled m.
    Prism(PrismArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct DodecahedronArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    pub m: u32,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct LoebellArgs {
    #[arg(long, default_value_t = 5)]
    pub n: usize,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct LambertArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub r: u32,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct CubeArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    pub m: u32,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct PrismArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    pub m: u32,
}
