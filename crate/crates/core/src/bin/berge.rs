use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use berge::format::render_disappointment;
use berge::game::DEFAULT_MAX_PLAYERS;
use berge::rational::parse_rational;
use berge::verify::grid;
use berge::{
    all_berge, disappointment_matrix, emit_report, parse_game_with_limit, verify_berge, Game,
    MixedProfile, ReportFormat,
};

/// Enumerate and check Berge equilibria of two-strategy games.
#[derive(Debug, Parser)]
#[command(name = "berge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "json-like")]
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find every Berge equilibrium of a game.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Largest accepted player count.
        #[arg(long, default_value_t = DEFAULT_MAX_PLAYERS)]
        max_n: usize,
    },
    /// Check one profile; exit 0 if it is a Berge equilibrium, 1 if not.
    Verify {
        file: PathBuf,
        /// Comma-separated probabilities of each player's first strategy.
        #[arg(long, allow_hyphen_values = true)]
        profile: String,
        #[arg(long, default_value_t = DEFAULT_MAX_PLAYERS)]
        max_n: usize,
    },
    /// Print the disappointment table in matrix layout.
    Disappointment {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_PLAYERS)]
        max_n: usize,
    },
    /// Compare the solver's boxes with a brute-force grid check.
    OracleCheck {
        file: PathBuf,
        #[arg(long)]
        resolution: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_PLAYERS)]
        max_n: usize,
    },
}

const INPUT_ERROR: u8 = 2;

fn load(file: &PathBuf, max_n: usize) -> Result<Game, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse_game_with_limit(&text, max_n).map_err(|e| format!("{}: {e}", file.display()))
}

fn parse_profile(text: &str, n: usize) -> Result<MixedProfile, String> {
    let probs = text
        .split(',')
        .enumerate()
        .map(|(i, s)| parse_rational(s).map_err(|e| format!("profile entry {i}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if probs.len() != n {
        return Err(format!(
            "profile has {} entries, game has {n} players",
            probs.len()
        ));
    }
    MixedProfile::new(probs).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Solve {
            file,
            format,
            max_n,
        } => {
            let game = load(&file, max_n)?;
            let format = match format {
                Format::Text => ReportFormat::Text,
                Format::Json => ReportFormat::Json,
            };
            print!("{}", emit_report(&all_berge(&game), format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            file,
            profile,
            max_n,
        } => {
            let game = load(&file, max_n)?;
            let profile = parse_profile(&profile, game.n())?;
            let ok = verify_berge(&game, &profile).map_err(|e| e.to_string())?;
            if ok {
                println!("{profile} is a Berge equilibrium");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{profile} is not a Berge equilibrium");
                Ok(ExitCode::from(1))
            }
        }
        Command::Disappointment { file, max_n } => {
            let game = load(&file, max_n)?;
            print!(
                "{}",
                render_disappointment(&game, &disappointment_matrix(&game))
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleCheck {
            file,
            resolution,
            max_n,
        } => {
            if resolution == 0 {
                return Err("--resolution must be at least 1".into());
            }
            let game = load(&file, max_n)?;
            let report = all_berge(&game);
            let mut checked = 0usize;
            let mut accepted = 0usize;
            for profile in grid(game.n(), resolution) {
                let verified = verify_berge(&game, &profile).map_err(|e| e.to_string())?;
                let boxed = report.contains(&profile);
                if verified != boxed {
                    println!(
                        "disagreement at {profile}: verifier says {verified}, boxes say {boxed}"
                    );
                    return Ok(ExitCode::from(1));
                }
                checked += 1;
                accepted += usize::from(verified);
            }
            println!(
                "agreement on {checked} grid profiles at resolution {resolution} ({accepted} equilibria)"
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(INPUT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
