use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use cayaut_cli::args::Format;
use cayaut_cli::{run, Cli, Output};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, failed) = match run(&cli) {
        Ok(Output::Report(r)) => {
            let text = match cli.opts.format {
                Format::Json => r.to_json(),
                Format::Text => r.to_text(),
            };
            (text, r.failed())
        }
        Ok(Output::Raw(s)) => (s, false),
        Err(e) => {
            eprintln!("cayaut: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.opts.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("cayaut: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
