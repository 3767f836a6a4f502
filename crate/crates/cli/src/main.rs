use std::io::{self, Write};
use std::process::ExitCode;

use quadfit_cli::{parse_args, run, usage_error_text, EXIT_USAGE};

fn main() -> ExitCode {
    let config = match parse_args(std::env::args_os()) {
        Ok(config) => config,
        Err(e) if e.exit_code() == EXIT_USAGE => {
            let _ = io::stderr().write_all(usage_error_text(&e).as_bytes());
            return ExitCode::from(EXIT_USAGE as u8);
        }
        // --help and --version
        Err(e) => e.exit(),
    };
    let code = run(&config, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
