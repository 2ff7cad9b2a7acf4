use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use chowcalc::Verification;
use chowcalc_cli::corpus;
use chowcalc_cli::runner::{EXIT_MISMATCH, EXIT_SCRIPT_ERROR};
use chowcalc_cli::{combined_exit, plain, report, run_all, Input, ScriptRun};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "chowcalc",
    version,
    about = "Chern and Segre class calculator with bigness checks"
)]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run scripts from files, inline text or stdin.
    Run(RunArgs),
    /// Replay the built-in example corpus and compare with expected values.
    Examples {
        /// Example to replay; all when omitted.
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Script file (repeatable).
    #[arg(long = "script", value_name = "PATH")]
    scripts: Vec<String>,
    /// Inline script text (repeatable).
    #[arg(short = 'e', value_name = "SCRIPT")]
    inline: Vec<String>,
    /// Use only the certificate's assertions, never computed facts.
    #[arg(long)]
    trust_certificate: bool,
    /// Script files; `-` reads stdin.
    paths: Vec<String>,
}

fn emit(out: &mut impl Write, runs: &[ScriptRun], format: Format) -> io::Result<()> {
    for run in runs {
        match format {
            Format::Json => writeln!(out, "{}", report::render(run))?,
            Format::Plain => {
                if runs.len() > 1 {
                    writeln!(out, "== {} ==", run.name)?;
                }
                write!(out, "{}", plain::render(run))?;
            }
        }
    }
    out.flush()
}

fn run(args: RunArgs) -> u8 {
    let mut inputs: Vec<Input> = Vec::new();
    for (i, text) in args.inline.iter().enumerate() {
        inputs.push(Input::inline(format!("-e#{}", i + 1), text.clone()));
    }
    for path in args.scripts.iter().chain(&args.paths) {
        inputs.push(Input::read(path));
    }
    if inputs.is_empty() {
        if io::stdin().is_terminal() {
            eprintln!("chowcalc: reading script from stdin");
        }
        inputs.push(Input::read("-"));
    }
    for input in &inputs {
        if let Err(msg) = &input.source {
            eprintln!("chowcalc: {msg}");
        }
    }
    let verification = if args.trust_certificate {
        Verification::TrustCertificate
    } else {
        Verification::Compute
    };
    let runs = run_all(&inputs, verification);
    if let Err(err) = emit(&mut io::stdout().lock(), &runs, args.format) {
        eprintln!("chowcalc: {err}");
        return chowcalc_cli::runner::EXIT_IO;
    }
    combined_exit(&runs)
}

fn examples(name: Option<String>, format: Format) -> u8 {
    let selected: Vec<&'static corpus::Example> = match name {
        Some(n) => match corpus::find(&n) {
            Some(e) => vec![e],
            None => {
                eprintln!(
                    "chowcalc: unknown example `{n}` (available: {})",
                    corpus::names().join(", ")
                );
                return EXIT_SCRIPT_ERROR;
            }
        },
        None => corpus::EXAMPLES.iter().collect(),
    };
    let replays: Vec<corpus::Replay> = selected.into_iter().map(corpus::replay).collect();
    let runs: Vec<ScriptRun> = replays.iter().map(|r| r.run.clone()).collect();
    if let Err(err) = emit(&mut io::stdout().lock(), &runs, format) {
        eprintln!("chowcalc: {err}");
        return chowcalc_cli::runner::EXIT_IO;
    }
    let mut failed = false;
    for r in &replays {
        if r.passed() {
            eprintln!("ok   {}", r.example.name);
        } else {
            failed = true;
            eprintln!("FAIL {}", r.example.name);
            for m in &r.mismatches {
                eprintln!("  {m}");
            }
        }
    }
    if failed {
        EXIT_MISMATCH
    } else {
        0
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Some(Command::Run(args)) => run(args),
        Some(Command::Examples { name, format }) => examples(name, format),
        None => run(cli.run),
    };
    ExitCode::from(code)
}
