//! `fine`: Fine interiors, multipliers, classification runs and
//! verification from the command line.
//!
//! Exit codes: 0 success, 1 failed verification or other error, 2 parse
//! error, 3 dimension violation, 4 count mismatch under `classify --check`.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fine::commands::{
    cmd_classify, cmd_fine, cmd_multipliers, cmd_verify, ClassifyOptions, CliError, Target, VerifyArgs,
};
use fine::parallel::{default_jobs, JOBS_ENV};

#[derive(Parser)]
#[command(name = "fine", version, about = "Fine interiors and F-hollow lattice polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Polygons,
    WeaklySporadic,
    Sporadic,
}

#[derive(Subcommand)]
enum Command {
    /// Print the vertices of the Fine interior of a (dilated) polytope.
    Fine {
        file: PathBuf,
        /// Dilation factor `p/q`.
        #[arg(long)]
        dilation: Option<String>,
        /// Use the brute-force oracle over dual vectors of max-norm at most B.
        #[arg(long, value_name = "B")]
        brute: Option<u32>,
    },
    /// Print the minimal, maximal and canonical-closure multipliers.
    Multipliers { file: PathBuf },
    /// Run a classification and print its summary.
    Classify {
        target: TargetArg,
        /// JSONL result file; a journal is kept next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default from FINE_JOBS, else all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Continue from the journal of an interrupted run.
        #[arg(long, requires = "out")]
        resume: bool,
        /// Compare the result with the published counts (exit 4 on mismatch).
        #[arg(long)]
        check: bool,
    },
    /// Cross-check a polytope file or the built-in corpus.
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        /// Random subpolytopes added to the corpus.
        #[arg(long, default_value_t = 180)]
        random: usize,
        /// Oracle bound (default: largest canonical ray norm, and one more).
        #[arg(long, value_name = "B")]
        bound: Option<u32>,
    },
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Fine { file, dilation, brute } => cmd_fine(out, &file, dilation.as_deref(), brute),
        Command::Multipliers { file } => cmd_multipliers(out, &file),
        Command::Classify { target, out: path, jobs, resume, check } => {
            let target = match target {
                TargetArg::Polygons => Target::Polygons,
                TargetArg::WeaklySporadic => Target::WeaklySporadic,
                TargetArg::Sporadic => Target::Sporadic,
            };
            let opts = ClassifyOptions { out: path, jobs: jobs.unwrap_or_else(default_jobs), resume, check };
            cmd_classify(out, target, &opts)
        }
        Command::Verify { file, corpus, random, bound } => cmd_verify(out, &VerifyArgs { file, corpus, random, bound }),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    log::debug!("{JOBS_ENV} default: {}", default_jobs());
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
