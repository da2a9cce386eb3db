use std::process::ExitCode;

fn main() -> ExitCode {
    airygap::cli::run()
}
