use std::process::ExitCode;

fn main() -> ExitCode {
    dkp_ws::cli::main()
}
