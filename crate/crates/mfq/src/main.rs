use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(mfq::cli::run(std::env::args_os()))
}
