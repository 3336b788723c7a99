use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use pindex_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // usage errors are input errors; exit 2 is reserved for undefined metrics
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let result = run(&cli).and_then(|out| match out.path {
        Some(path) => std::fs::write(&path, &out.text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{}", out.text);
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
