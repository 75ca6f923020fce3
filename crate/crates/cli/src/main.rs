use std::io::{Read, Write};
use std::process::ExitCode;

use tamil_stem_cli::{parse_args, run, EXIT_NO_INPUT};

fn main() -> ExitCode {
    let config = match parse_args(std::env::args_os()) {
        Ok(c) => c,
        Err(outcome) => {
            print!("{}", outcome.stdout);
            eprint!("{}", outcome.stderr);
            return ExitCode::from(outcome.code as u8);
        }
    };
    let mut input = Vec::new();
    if config.command.reads_stdin() {
        if let Err(e) = std::io::stdin().read_to_end(&mut input) {
            eprintln!("stdin: {e}");
            return ExitCode::from(EXIT_NO_INPUT as u8);
        }
    }
    let outcome = run(&config, &input);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
