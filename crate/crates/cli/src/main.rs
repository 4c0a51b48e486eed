use std::process::ExitCode;

fn main() -> ExitCode {
    boolspec_cli::run_cli(std::env::args_os())
}
