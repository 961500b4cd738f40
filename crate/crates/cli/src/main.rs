use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = schrom::Cli::parse();
    let mut out = std::io::BufWriter::new(std::io::stdout());
    let status = schrom::run(cli, &mut out);
    let _ = out.flush();
    match status {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(schrom::INPUT_ERROR)
        }
    }
}
