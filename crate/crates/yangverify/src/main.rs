use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use yangverify::repl::{run_repl, Session};
use yangverify::{run_suite, Format, RunConfig, Suite};

/// Verifier for the defining relations, Hopf structure and Drinfeld tower of the psl(2|2) Yangian.
#[derive(Parser)]
#[command(name = "yangverify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify {
        suite: Suite,
        /// Highest total level of the drinfeld and rho suites.
        #[arg(long)]
        level_bound: Option<u32>,
        /// Longest word allowed in an intermediate normal form.
        #[arg(long)]
        max_word_len: Option<usize>,
        /// Highest filtration degree the bracket table covers.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Straightening budget of one reduction.
        #[arg(long)]
        max_rounds: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Reduce one expression, or run a REPL command such as `:delta x+[1,1]`.
    Eval { line: String },
    /// Interactive evaluator.
    Repl,
}

const CONFIG_ERROR: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    match cli.command {
        Command::Verify {
            suite,
            level_bound,
            max_word_len,
            max_degree,
            max_rounds,
            format,
            jobs,
        } => {
            let config = RunConfig {
                suite,
                level_bound,
                max_word_length: max_word_len,
                max_degree,
                max_rounds,
                jobs,
            };
            match run_suite(&config) {
                Ok(doc) => {
                    print!("{}", doc.render(format));
                    let _ = io::stdout().flush();
                    eprintln!("{}", doc.summary_line());
                    ExitCode::from(doc.exit_code() as u8)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(CONFIG_ERROR)
                }
            }
        }
        Command::Eval { line } => match Session::default().handle(&line) {
            Some(Ok(s)) => {
                println!("{s}");
                ExitCode::SUCCESS
            }
            Some(Err(s)) => {
                eprintln!("error: {s}");
                ExitCode::from(CONFIG_ERROR)
            }
            None => ExitCode::SUCCESS,
        },
        Command::Repl => {
            let stdin = io::stdin();
            let prompt = stdin.is_terminal();
            match run_repl(stdin.lock(), io::stdout(), io::stderr(), prompt) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            }
        }
    }
}
