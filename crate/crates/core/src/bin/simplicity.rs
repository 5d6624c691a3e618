use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = simplicity::cli::run(
        std::env::args_os(),
        &mut io::stdin(),
        &mut io::stdout(),
        &mut io::stderr(),
    );
    ExitCode::from(status.code as u8)
}
