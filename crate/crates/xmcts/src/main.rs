use std::io;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use xmcts::cli::{self, Cli, Command};

fn run(cli: Cli) -> anyhow::Result<()> {
    let stdout = &mut io::stdout().lock();
    match &cli.command {
        Some(Command::Play(a)) => cli::play(a, &mut io::stdin().lock(), stdout),
        Some(Command::Selfplay(a)) => cli::selfplay(a, stdout),
        Some(Command::Analyze(a)) => cli::analyze(a, stdout),
        Some(Command::Replay(a)) => cli::replay(a, stdout),
        None => {
            let rt = tokio::runtime::Runtime::new()?;
            Ok(rt.block_on(xmcts::server::serve(cli.port))?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.command.is_none() && !cli.serve {
        let _ = Cli::command().print_help();
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
