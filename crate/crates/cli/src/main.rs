use std::io::Write;
use std::process::ExitCode;

use adjoint_cli::command::ORDER_ENV;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let env_order = std::env::var(ORDER_ENV).ok();
    let out = adjoint_cli::run(&argv, env_order.as_deref());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.status as u8)
}
