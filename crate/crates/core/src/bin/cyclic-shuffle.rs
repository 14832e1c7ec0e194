use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cyclic_shuffle::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let status = match run(cli, &mut out) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.status
        }
    };
    let _ = out.flush();
    ExitCode::from(status as u8)
}
