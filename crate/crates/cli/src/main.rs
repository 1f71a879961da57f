use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use splpat_core::report::{
    parse_answer_sheet, render_comparison, render_report, render_schema, render_trace, ReportFormat,
};
use splpat_core::{AnswerSheet, AssessmentError, Assessor};
use thiserror::Error;

/// Software product line process assessment with a cascaded fuzzy model.
#[derive(Debug, Parser)]
#[command(name = "splpat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Assess an answer sheet and print the per-activity report.
    Assess {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Append the full cascade trace.
        #[arg(long)]
        trace: bool,
    },
    /// Compare the fuzzy result with the statistical average and the declared level.
    Compare { path: PathBuf },
    /// List the questionnaire.
    Schema {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show how every score was reduced, node by node.
    Explain { path: PathBuf },
    /// Run the HTTP API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        bind: IpAddr,
        /// Directory of a built web UI to serve under `/`.
        #[arg(long)]
        ui_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Machine => ReportFormat::Machine,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    /// Bad input: exit status 1.
    #[error("{0}")]
    Invalid(String),
    /// I/O or network failure: exit status 2.
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            Self::Invalid(_) => ExitCode::from(1),
            Self::Io(_) => ExitCode::from(2),
        }
    }
}

fn load(path: &Path) -> Result<AnswerSheet, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_answer_sheet(&bytes).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn assess(sheet: &AnswerSheet) -> Result<splpat_core::AssessmentResult, CliError> {
    Assessor::default().assess(sheet).map_err(|e| match e {
        AssessmentError::Validation(_) => CliError::Invalid(e.to_string()),
        // a parsed sheet always assesses; report anything else as a failure
        other => CliError::Io(format!("assessment failed: {other}")),
    })
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .map_err(|e| CliError::Io(format!("cannot write output: {e}")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Assess {
            path,
            format,
            trace,
        } => {
            let result = assess(&load(&path)?)?;
            emit(&render_report(&result, format.into(), trace))
        }
        Command::Compare { path } => {
            let sheet = load(&path)?;
            let result = assess(&sheet)?;
            let mut out = String::new();
            if !result.organization.is_empty() {
                out.push_str(&format!("Organization: {}\n\n", result.organization));
            }
            out.push_str(&render_comparison(&Assessor::comparison(
                &result,
                sheet.declared_cmm(),
            )));
            emit(&out)
        }
        Command::Schema { format } => emit(&render_schema(
            &Assessor::default().model().schema,
            format.into(),
        )),
        Command::Explain { path } => emit(&render_trace(&assess(&load(&path)?)?.trace)),
        Command::Serve { port, bind, ui_dir } => serve(SocketAddr::new(bind, port), ui_dir),
    }
}

fn serve(addr: SocketAddr, ui_dir: Option<PathBuf>) -> Result<(), CliError> {
    tracing_subscriber::fmt()
        .with_max_level(tracing_subscriber::filter::LevelFilter::INFO)
        .with_writer(std::io::stderr)
        .init();
    let runtime = tokio::runtime::Runtime::new()
        .map_err(|e| CliError::Io(format!("cannot start runtime: {e}")))?;
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .map_err(|e| CliError::Io(format!("cannot bind {addr}: {e}")))?;
        let local = listener
            .local_addr()
            .map_err(|e| CliError::Io(format!("cannot read bound address: {e}")))?;
        // scripts read the chosen port from this line, so it goes to stdout
        emit(&format!("listening on http://{local}\n"))?;
        let app = splpat_service::router_with_ui(ui_dir);
        let shutdown = async {
            let _ = tokio::signal::ctrl_c().await;
        };
        splpat_service::serve(listener, app, shutdown)
            .await
            .map_err(|e| CliError::Io(format!("server failed: {e}")))
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors count as bad input; help and version are successes
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
