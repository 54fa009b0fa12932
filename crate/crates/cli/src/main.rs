use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use z2z4::SelfDualClass;
use z2z4_cli::{
    cmd_catalog, cmd_classify, cmd_construct, cmd_dual, cmd_gleason, cmd_glue, cmd_info,
    cmd_neighbor, cmd_search, cmd_shadow, cmd_verify, cmd_we, install_guard, parse_bool, CliError,
    CliResult, Format, Recipe, Variant,
};

/// Self-dual additive codes over Z2 x Z4.
#[derive(Debug, Parser)]
#[command(name = "z2z4", version)]
struct Cli {
    /// Override every enumeration limit with N (binary length alpha + 2 beta).
    #[arg(long, global = true, value_name = "N")]
    guard: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Type, class, separability, enumerator, Gleason and shadow summary.
    Info { file: PathBuf },
    /// The dual code as a code file.
    Dual {
        file: PathBuf,
        /// Scan the whole ambient group instead of using the standard form.
        #[arg(long)]
        oracle: bool,
    },
    /// Class, separability and antipodality on one line.
    Classify { file: PathBuf },
    /// Weight enumerator of the code, its even subcode or its shadow.
    We {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Plain)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expansion of the enumerator in the invariant ring of the code's class.
    Gleason {
        file: PathBuf,
        /// Use the ring of this class (0, I or II) instead.
        #[arg(long, value_parser = parse_class)]
        class: Option<SelfDualClass>,
    },
    /// Shadow set and, for Type 0 codes, the coset decomposition.
    Shadow { file: PathBuf },
    /// The self-dual neighbor <C ∩ v^perp, v>.
    Neighbor { file: PathBuf, vector: String },
    /// Glues two Type 0 codes into a self-dual code of the summed length.
    Glue { first: PathBuf, second: PathBuf },
    /// Builds a catalog code by name, or a code for (alpha, beta, class).
    Construct {
        /// Catalog name (see `catalog`).
        name: Option<String>,
        #[arg(long, conflicts_with = "name", requires_all = ["beta", "class"])]
        alpha: Option<usize>,
        #[arg(long)]
        beta: Option<usize>,
        #[arg(long, value_parser = parse_class)]
        class: Option<SelfDualClass>,
        /// yes or no; omitted means either.
        #[arg(long, value_parser = parse_bool)]
        separable: Option<bool>,
    },
    /// Runs the built-in checks on the catalog codes.
    Verify,
    /// Exhaustive search for self-dual codes on a small ambient.
    Search {
        alpha: usize,
        beta: usize,
        #[arg(long, value_parser = parse_class)]
        class: Option<SelfDualClass>,
        /// Keep one code per coordinate-permutation class.
        #[arg(long)]
        dedup: bool,
    },
    /// Lists the built-in codes.
    Catalog,
}

fn parse_class(s: &str) -> Result<SelfDualClass, String> {
    s.parse().map_err(|e: z2z4::Error| e.to_string())
}

fn run(command: Command) -> (String, CliResult<()>) {
    let out = match command {
        Command::Info { file } => cmd_info(&file),
        Command::Dual { file, oracle } => cmd_dual(&file, oracle),
        Command::Classify { file } => cmd_classify(&file),
        Command::We { file, variant, format } => cmd_we(&file, variant, format),
        Command::Gleason { file, class } => cmd_gleason(&file, class),
        Command::Shadow { file } => cmd_shadow(&file),
        Command::Neighbor { file, vector } => cmd_neighbor(&file, &vector),
        Command::Glue { first, second } => cmd_glue(&first, &second),
        Command::Construct { name, alpha, beta, class, separable } => {
            let recipe = match (name, alpha, beta, class) {
                (Some(name), None, _, _) => Ok(Recipe::Catalog(name)),
                (None, Some(alpha), Some(beta), Some(class)) => Ok(Recipe::Ladder { alpha, beta, class, separable }),
                _ => Err(CliError::Usage("give a catalog name or --alpha, --beta and --class".into())),
            };
            recipe.and_then(|r| cmd_construct(&r))
        }
        Command::Verify => return cmd_verify(),
        Command::Search { alpha, beta, class, dedup } => cmd_search(alpha, beta, class, dedup),
        Command::Catalog => cmd_catalog(),
    };
    match out {
        Ok(text) => (text, Ok(())),
        Err(e) => (String::new(), Err(e)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    install_guard(cli.guard);
    let (text, status) = run(cli.command);
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
