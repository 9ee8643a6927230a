use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hochlift_cli::{load, run, CliError, Command};

/// Hochschild cohomology, cup products and Gerstenhaber brackets via homotopy liftings.
#[derive(Parser)]
#[command(name = "hochlift", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// `records` appends one tab-separated line per check
    #[arg(long, global = true, value_parser = ["records"])]
    emit: Option<String>,
    /// Worker threads (default: HOCHLIFT_THREADS, then the number of CPUs)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Args)]
struct FileArg {
    file: PathBuf,
}

#[derive(Subcommand)]
enum Cmd {
    Validate {
        file: PathBuf,
        /// also print the canonical form of the file
        #[arg(long)]
        canonical: bool,
    },
    Resolve(FileArg),
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    Cup(FileArg),
    Bracket(FileArg),
    Lift(FileArg),
    TwistBuild {
        file: PathBuf,
        /// q with t(1⊗1) = q on Z⊗Z, overriding the file's bicharacter
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<String>,
    },
    VerifyIso {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<String>,
    },
    OracleCheck {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    ExamplePaper,
}

fn threads(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("HOCHLIFT_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("HOCHLIFT_THREADS must be a positive integer, found `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = (|| {
        if let Some(n) = threads(cli.threads)? {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global()
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
        let (cmd, file) = match cli.command {
            Cmd::Validate { file, canonical } => (Command::Validate { canonical }, Some(file)),
            Cmd::Resolve(f) => (Command::Resolve, Some(f.file)),
            Cmd::Cohomology { file, degree } => (Command::Cohomology { degree }, Some(file)),
            Cmd::Cup(f) => (Command::Cup, Some(f.file)),
            Cmd::Bracket(f) => (Command::Bracket, Some(f.file)),
            Cmd::Lift(f) => (Command::Lift, Some(f.file)),
            Cmd::TwistBuild { file, twist } => (Command::TwistBuild { twist }, Some(file)),
            Cmd::VerifyIso { file, max_degree, twist } => (Command::VerifyIso { max_degree, twist }, Some(file)),
            Cmd::OracleCheck { file, max_degree } => (Command::OracleCheck { max_degree }, Some(file)),
            Cmd::ExamplePaper => (Command::ExamplePaper, None),
        };
        let problem = match &file {
            Some(path) => Some(load(path)?),
            None => None,
        };
        run(&cmd, problem.as_ref())
    })();
    match outcome {
        Ok(report) => {
            print!("{}", report.render(cli.emit.is_some()));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
