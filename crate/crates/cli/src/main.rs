//! `dedekind` command-line tool.
//!
//! Exit codes: 0 when every requested check passes, 1 when a verification
//! check fails, 2 for usage and input errors.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dedekind::det::DetStrategy;
use dedekind::factor::DEFAULT_ORDER_CAP;

pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "dedekind",
    version,
    about = "Group determinants, regular representations and their factorizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Catalog key (e.g. `sym:3`) or path to a Cayley-table JSON file.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Subgroup: generators by name or index, or a keyword such as `center`, `derived`, `whole`.
    #[arg(long, global = true)]
    pub subgroup: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Dft)]
    pub det_strategy: StrategyArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Largest group order for which `Theta(G)` is expanded directly.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyArg {
    Leibniz,
    Minor,
    Dft,
    CrossCheck,
}

impl From<StrategyArg> for DetStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Leibniz => DetStrategy::Leibniz,
            StrategyArg::Minor => DetStrategy::MinorExpansion,
            StrategyArg::Dft => DetStrategy::CharacterDft,
            StrategyArg::CrossCheck => DetStrategy::CrossCheck,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in groups.
    Groups,
    /// Print the group determinant Theta(G).
    Theta,
    /// Factor Theta(G) over an abelian subgroup and verify the factorization.
    Factorize,
    /// Run verification checks; `--all` runs the full acceptance matrix.
    Verify {
        #[arg(long)]
        all: bool,
    },
    /// Conjugate an element across an abelian subgroup of index 2.
    Conjugate {
        /// Integer coefficients by element index; defaults to the generic element.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<i64>>,
    },
    /// Randomized check of the 2x2 inverse formula over an index-2 subgroup.
    Invert2 {
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Print the lift of an element to matrices over the subgroup algebra.
    Lift {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<i64>>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.common.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.common.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let cfg = &cli.common;
    let result = match cli.command {
        Command::Groups => commands::groups(cfg),
        Command::Theta => commands::theta(cfg),
        Command::Factorize => commands::factorize(cfg),
        Command::Verify { all } => commands::verify(cfg, all),
        Command::Conjugate { coeffs } => commands::conjugate(cfg, coeffs),
        Command::Invert2 { samples } => commands::invert2(cfg, samples),
        Command::Lift { coeffs } => commands::lift(cfg, coeffs),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFICATION_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
