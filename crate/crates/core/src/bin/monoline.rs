use std::process::ExitCode;

fn main() -> ExitCode {
    monoline::cli::main_with_args(std::env::args_os())
}
