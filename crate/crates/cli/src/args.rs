use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "difftangent",
    version,
    about = "Tangent spaces of Euclidean spaces, irrational tori and orbit spaces R^n/O(n)",
    after_help = "Exit codes: 0 determined, 1 no witness, 2 input error, 3 undetermined."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tangent space of one space under one functor.
    Tangent(TangentArgs),
    /// Dimension matrices.
    #[command(subcommand)]
    Table(TableCommand),
    /// Witnesses for maps between catalog spaces.
    #[command(subcommand)]
    Witness(WitnessCommand),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctorArg {
    Internal,
    Right,
    Vincent,
    YInternal,
    YRight,
}

#[derive(Args, Debug)]
pub struct TangentArgs {
    /// R^<k>, torus:<expr> or orbit:<n>.
    #[arg(long, allow_hyphen_values = true)]
    pub space: String,
    #[arg(long, value_enum)]
    pub functor: FunctorArg,
    /// Test space for y-internal and y-right.
    #[arg(long, allow_hyphen_values = true)]
    pub test: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum TableCommand {
    /// Internal, Vincent-type and right dimensions over the catalog.
    Classical {
        #[arg(long, default_value_t = 3)]
        max_euclidean: u32,
        #[arg(long, default_value_t = 4)]
        max_orbit: u32,
        /// Comma-separated torus slopes; defaults to the built-in pool.
        #[arg(long, allow_hyphen_values = true)]
        slopes: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// y-internal matrix over tori: rows are test slopes, columns space slopes.
    Torus {
        /// Comma-separated torus slopes.
        #[arg(long, allow_hyphen_values = true)]
        slopes: String,
        #[arg(long)]
        json: bool,
    },
    /// y-right matrix over orbit spaces: rows are test m, columns space n.
    Orbit {
        #[arg(long)]
        max: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum WitnessCommand {
    /// Integer Möbius relation alpha = (a + b·beta)/(c + d·beta).
    Mobius(PairArgs),
    /// Unimodular relation (diffeomorphism of tori) with both continued fractions.
    Diffeo(PairArgs),
    /// Standard embedding R^m → R^n lifting H_m → H_n.
    Embed {
        #[arg(long = "m")]
        m: u32,
        #[arg(long = "n")]
        n: u32,
    },
    /// Checks a polynomial map and reports its descended germ and pushforward.
    Lift {
        /// Components separated by ';', e.g. "x1^2+x2^2; 0".
        #[arg(long, allow_hyphen_values = true)]
        map: String,
        /// Source dimension, when larger than the highest variable used.
        #[arg(long = "m")]
        m: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
}
