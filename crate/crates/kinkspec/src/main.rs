use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(kinkspec::cli::run() as u8)
}
