use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qstrat::repcat::DEFAULT_SEED;
use qstrat_cli::{build, exit_code, parse_field, render_text, Command, Options};

#[derive(Parser)]
#[command(name = "qstrat", version, about = "Stratified quiver algebras: tilting, Ringel and two-step duals")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include filtration certificates.
    #[arg(long, global = true)]
    certificates: bool,
    /// Include action matrices of every tabulated module.
    #[arg(long, global = true)]
    dump: bool,
    /// Ground field, `q` or `gf:p`; overrides the input file.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Resolution length cap.
    #[arg(long, global = true, default_value_t = 16)]
    cap: usize,
    /// Seed for randomized isomorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classification and standard modules.
    Analyze { file: PathBuf },
    /// Ringel dual presentation and classification.
    Ringel { file: PathBuf },
    /// S, N, H, the two-step dual and the Ringel dual test.
    Twostep { file: PathBuf },
    /// Finitistic dimension and the identities that apply.
    Findim { file: PathBuf },
    /// Everything.
    Report { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, file) = match &cli.command {
        Cmd::Analyze { file } => (Command::Analyze, file),
        Cmd::Ringel { file } => (Command::Ringel, file),
        Cmd::Twostep { file } => (Command::TwoStep, file),
        Cmd::Findim { file } => (Command::Findim, file),
        Cmd::Report { file } => (Command::Report, file),
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let field = match cli.field.as_deref().map(parse_field).transpose() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = Options { field, cap: cli.cap, seed: cli.seed, certificates: cli.certificates, dump: cli.dump };
    match build(cmd, &text, &opts) {
        Ok(r) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
            } else {
                print!("{}", render_text(&r));
            }
            let bad = r.violations();
            for v in &bad {
                eprintln!("theorem violation: {v}");
            }
            if bad.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
