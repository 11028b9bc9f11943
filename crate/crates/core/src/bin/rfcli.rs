use std::process::ExitCode;

fn main() -> ExitCode {
    lamplighter_rf::cli::main_with_args(std::env::args_os())
}
