use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = pfhanoi::cli::run(std::env::args_os(), &mut out, &mut err);
    ExitCode::from(code as u8)
}
