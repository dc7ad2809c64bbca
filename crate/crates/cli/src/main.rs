use std::process::ExitCode;

fn main() -> ExitCode {
    oddsing_cli::main_entry()
}
