use std::io;
use std::panic;
use std::process::ExitCode;

use grothendieck::cli;

fn main() -> ExitCode {
    if let Err(msg) = cli::configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(cli::EXIT_USAGE as u8);
    }
    let code = panic::catch_unwind(|| {
        let (stdout, stderr) = (io::stdout(), io::stderr());
        cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
    })
    .unwrap_or(cli::EXIT_INTERNAL);
    ExitCode::from(code as u8)
}
