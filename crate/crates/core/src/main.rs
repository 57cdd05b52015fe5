use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qgap::report::{
    cmd_charpoly, cmd_evaluate, cmd_hatcheck, cmd_kappa, cmd_qmatrix, cmd_verify_all,
    proven_gamma, CampaignConfig, ReportFormat,
};
use qgap::Error;

/// Exit codes: 0 = all checks pass, 1 = a mathematical check failed (the
/// report embeds the witness), 2 = usage or I/O error.
#[derive(Parser)]
#[command(name = "qgap", version, about = "Exact verification of the doubly stochastic Laguerre matrices and the sharpened radial Strichartz functional")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification campaign over a range of S.
    VerifyAll {
        #[arg(long, default_value_t = 1)]
        s_min: usize,
        #[arg(long, default_value_t = 10)]
        s_max: usize,
        /// Exhaustive hat-check sweep over a+b+c+d <= this bound (hard cap 12).
        #[arg(long, default_value_t = 8)]
        hatcheck_max_n: usize,
        /// Sharpening constant for the random functional campaign.
        #[arg(long, default_value_t = proven_gamma())]
        gamma: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Worker count; defaults to QGAP_JOBS or the number of cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the exact matrix Q_S.
    Qmatrix {
        s: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Print the exact kernel matrix kappa_S.
    Kappa {
        s: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Print the exact characteristic polynomial of Q_S (ascending).
    Charpoly { s: usize },
    /// Evaluate the sharpened inequality on a coefficient file.
    Evaluate {
        file: PathBuf,
        #[arg(long, default_value_t = proven_gamma())]
        gamma: f64,
    },
    /// Signed hat-check count for one club partition, against 2^n Q(a,b,c,d).
    Hatcheck {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },
}

fn jobs_from_env() -> usize {
    std::env::var("QGAP_JOBS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}

fn run() -> Result<ExitCode, Error> {
    match Cli::parse().command {
        Command::VerifyAll {
            s_min,
            s_max,
            hatcheck_max_n,
            gamma,
            seed,
            out,
            format,
            jobs,
        } => {
            let config = CampaignConfig {
                s_min,
                s_max,
                hatcheck_max_n,
                gamma,
                seed,
                output_path: out,
                format: format.into(),
                jobs: jobs.unwrap_or_else(jobs_from_env),
                ..CampaignConfig::default()
            };
            let report = cmd_verify_all(&config)?;
            match &config.output_path {
                None => println!("{}", report.render()),
                Some(path) => eprintln!("report written to {}", path.display()),
            }
            Ok(if report.overall_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Qmatrix { s, format } => {
            println!("{}", cmd_qmatrix(s, format.into()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Kappa { s, format } => {
            println!("{}", cmd_kappa(s, format.into()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly { s } => {
            println!("{}", cmd_charpoly(s));
            Ok(ExitCode::SUCCESS)
        }
        Command::Evaluate { file, gamma } => {
            println!("{}", cmd_evaluate(&file, gamma)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Hatcheck { a, b, c, d } => {
            let (rendered, matched) = cmd_hatcheck(a, b, c, d)?;
            println!("{rendered}");
            Ok(if matched {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
