//! Command-line front end: expression parsing, evaluation, canonical and
//! structured printing, and the verification dispatcher.
//!
//! Exit codes: 0 success / verification passed, 1 verification failure,
//! 2 usage or configuration error.

pub mod ast;
pub mod eval;
pub mod output;
pub mod parser;
pub mod session;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser as ClapParser, Subcommand};

use qsuperspace::verify::{run_suite, SUITES};

use eval::{Evaluator, Value};
use session::{Format, Options, SessionConfig};

#[derive(ClapParser, Debug)]
#[command(
    name = "qss",
    about = "Exact symbolic engine for a multiparametric quantum (m+n)-superspace and its logarithmic extension",
    disable_help_subcommand = true
)]
struct Cli {
    /// Number of even generators.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Number of odd generators.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Comma-separated weight vector, z1 must be 1 (e.g. --z 1,2,-1).
    #[arg(long, global = true)]
    z: Option<String>,
    /// Generator namespace: A (a_i) or M (g, x_i).
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// Truncation order for the logarithm consistency checks.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Random samples per verification check.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Seed for the deterministic sampler.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format: text or json.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Optional key=value config file (m, n, z, algebra, order, samples,
    /// seed, format); flags override.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normal-order an expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exterior derivative of an expression.
    D {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply the partial derivative with the given index.
    Partial {
        index: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coproduct of an expression.
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode of an expression.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit of an expression.
    Counit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the Maurer-Cartan form with the given index.
    Omega { index: usize },
    /// Apply the vector field with the given index.
    Vf {
        index: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Classical limit (p -> 1, h -> 0) of an expression.
    Limit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run a verification suite and exit 0 (pass) or 1 (failure).
    Verify { suite: String },
}

/// Captured result of one invocation.
#[derive(Debug)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn fail(code: i32, msg: impl Into<String>) -> CmdOutput {
    CmdOutput {
        code,
        stdout: String::new(),
        stderr: format!("{}\n", msg.into()),
    }
}

fn build_session(cli: &Cli) -> Result<SessionConfig, CmdOutput> {
    let mut flag_opts = Options {
        m: cli.m,
        n: cli.n,
        ..Options::default()
    };
    if let Some(z) = &cli.z {
        flag_opts.z = Some(session::parse_z(z).map_err(|e| fail(2, e))?);
    }
    if let Some(a) = &cli.algebra {
        flag_opts.algebra = Some(session::parse_algebra(a).map_err(|e| fail(2, e))?);
    }
    if let Some(f) = &cli.format {
        flag_opts.format = Some(session::parse_format(f).map_err(|e| fail(2, e))?);
    }
    flag_opts.order = cli.order;
    flag_opts.samples = cli.samples;
    flag_opts.seed = cli.seed;

    let merged = match &cli.config {
        Some(path) => flag_opts.or(session::load_config_file(path).map_err(|e| fail(2, e))?),
        None => flag_opts,
    };
    merged.into_session().map_err(|e| fail(2, e.to_string()))
}

fn eval_command(session: &SessionConfig, input: &str) -> Result<Value, CmdOutput> {
    let expr = parser::parse(input, session.algebra, session.param.total())
        .map_err(|e| fail(2, e.to_string()))?;
    Evaluator::new(session)
        .eval(&expr)
        .map_err(|e| fail(2, e.to_string()))
}

fn render(session: &SessionConfig, input: &str, value: &Value) -> CmdOutput {
    let stdout = match session.format {
        Format::Text => format!("{value}\n"),
        Format::Json => format!("{}\n", output::render_json(session, input, value)),
    };
    CmdOutput {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}

/// Run the command line given as argv (without the program name).
pub fn run(argv: &[String]) -> CmdOutput {
    let cli =
        match Cli::try_parse_from(std::iter::once("qss".to_string()).chain(argv.iter().cloned())) {
            Ok(cli) => cli,
            Err(e) => {
                let code = match e.kind() {
                    ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                    _ => 2,
                };
                let rendered = e.render().to_string();
                return if code == 0 {
                    CmdOutput {
                        code,
                        stdout: rendered,
                        stderr: String::new(),
                    }
                } else {
                    CmdOutput {
                        code,
                        stdout: String::new(),
                        stderr: rendered,
                    }
                };
            }
        };

    let session = match build_session(&cli) {
        Ok(s) => s,
        Err(out) => return out,
    };

    let wrap = |input: &str, result: Result<Value, CmdOutput>| -> CmdOutput {
        match result {
            Ok(v) => render(&session, input, &v),
            Err(out) => out,
        }
    };

    match &cli.command {
        Cmd::Normalize { expr } => wrap(expr, eval_command(&session, expr)),
        Cmd::D { expr } => {
            let input = format!("d({expr})");
            wrap(&input, eval_command(&session, &input))
        }
        Cmd::Partial { index, expr } => {
            let input = format!("partial({index}, {expr})");
            wrap(&input, eval_command(&session, &input))
        }
        Cmd::Coproduct { expr } => {
            let input = format!("Delta({expr})");
            wrap(&input, eval_command(&session, &input))
        }
        Cmd::Antipode { expr } => {
            let input = format!("S({expr})");
            wrap(&input, eval_command(&session, &input))
        }
        Cmd::Counit { expr } => {
            let input = format!("eps({expr})");
            wrap(&input, eval_command(&session, &input))
        }
        Cmd::Omega { index } => {
            let input = format!("omega({index})");
            wrap(&input, eval_command(&session, &input))
        }
        Cmd::Vf { index, expr } => {
            let input = format!("T({index}, {expr})");
            wrap(&input, eval_command(&session, &input))
        }
        Cmd::Limit { expr } => {
            let result =
                eval_command(&session, expr).map(|v| Evaluator::new(&session).classical(v));
            wrap(expr, result)
        }
        Cmd::Verify { suite } => {
            if !SUITES.contains(&suite.as_str()) {
                return fail(
                    2,
                    format!(
                        "unknown suite '{suite}', expected one of {}",
                        SUITES.join(", ")
                    ),
                );
            }
            match run_suite(
                suite,
                &session.param,
                session.samples,
                session.order,
                session.seed,
            ) {
                Ok(reports) => {
                    let mut stdout = String::new();
                    let mut all_ok = true;
                    for report in &reports {
                        stdout.push_str(&report.to_string());
                        all_ok &= report.passed();
                    }
                    stdout.push_str(if all_ok {
                        "verification: PASS\n"
                    } else {
                        "verification: FAIL\n"
                    });
                    CmdOutput {
                        code: if all_ok { 0 } else { 1 },
                        stdout,
                        stderr: String::new(),
                    }
                }
                Err(e) => fail(2, e.to_string()),
            }
        }
    }
}

/// Convenience wrapper for tests.
pub fn run_str(argv: &[&str]) -> CmdOutput {
    let owned: Vec<String> = argv.iter().map(|s| s.to_string()).collect();
    run(&owned)
}
