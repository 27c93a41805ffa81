use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bernstein_cli::commands::{self, Report};
use bernstein_cli::{AlgebraFile, CliError, CliResult, PresentationFile};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bernstein", version, about = "Exact analysis of Bernstein and train algebras")]
struct Cli {
    /// Append a machine-readable JSON section to the report.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized witness search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bernstein identity, Peirce decomposition and classification.
    Check { file: PathBuf },
    /// Degree, minimal polynomial and train rank of one element.
    Element {
        file: PathBuf,
        /// Linear combination of basis labels, e.g. "e + 2u1 - 1/2 v".
        spec: String,
    },
    /// Train, locally train and operator nilpotency verdicts.
    Train { file: PathBuf },
    /// Nil, Engel and Yagzhev verdicts on a subalgebra.
    Engel {
        file: PathBuf,
        /// `N`, `L` (Lyubich ideal) or `;`-separated generating elements.
        #[arg(default_value = "N")]
        carrier: String,
    },
    /// Build a catalog algebra and emit it as an algebra file.
    Construct {
        name: String,
        /// Factory parameter as key=value.
        #[arg(short = 'p', long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truncated Gröbner basis, Hilbert counts and normal words.
    Groebner {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_deg: usize,
        /// List normal words up to this degree.
        #[arg(long, default_value_t = 3)]
        list_deg: usize,
    },
    /// End-to-end Kurosh pipeline.
    KuroshDemo {
        #[arg(long, default_value_t = 12)]
        max_deg: usize,
        #[arg(long, default_value_t = 6)]
        trunc: usize,
    },
    /// List construction names and their parameters.
    Catalog,
}

fn parse_kv(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected key=value, got '{s}'"))
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> CliResult<bernstein_core::AlgebraTable> {
    AlgebraFile::parse(&read(path)?)
        .and_then(|f| f.to_table())
        .map_err(|e| match e {
            CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
            other => other,
        })
}

fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Check { file } => commands::cmd_check(&load_algebra(file)?),
        Command::Element { file, spec } => commands::cmd_element(&load_algebra(file)?, spec),
        Command::Train { file } => commands::cmd_train(&load_algebra(file)?, cli.seed),
        Command::Engel { file, carrier } => commands::cmd_engel(&load_algebra(file)?, carrier, cli.seed),
        Command::Construct { name, params, out } => {
            let t = commands::construct(name, params)?;
            let text = AlgebraFile::from_table(&t).to_json();
            match out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                    Ok(Report {
                        text: format!("wrote {} (dim {}) to {}\n", t.name(), t.dim(), path.display()),
                        json: serde_json::json!({ "name": t.name(), "dim": t.dim(), "out": path }),
                        passed: None,
                    })
                }
                None => Ok(Report {
                    text: format!("{text}\n"),
                    json: serde_json::json!({ "name": t.name(), "dim": t.dim() }),
                    passed: None,
                }),
            }
        }
        Command::Groebner { file, max_deg, list_deg } => {
            let p = PresentationFile::parse(&read(file)?)?.to_presentation()?;
            commands::cmd_groebner(&p, *max_deg, *list_deg)
        }
        Command::KuroshDemo { max_deg, trunc } => commands::cmd_kurosh_demo(*max_deg, *trunc, cli.seed),
        Command::Catalog => {
            let mut text = String::new();
            for (name, params) in bernstein_core::constructions::FACTORIES {
                text.push_str(&format!("{name}  {params}\n"));
            }
            Ok(Report { text, json: serde_json::json!(bernstein_core::constructions::FACTORIES), passed: None })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            print!("{}", r.text);
            if cli.json {
                println!("--- json ---");
                println!("{}", serde_json::to_string_pretty(&r.json).expect("report serializes"));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
