use std::process::ExitCode;

fn main() -> ExitCode {
    let out = wreathmac::cli::main_with_args(std::env::args_os().skip(1));
    println!("{}", out.json.trim_end());
    ExitCode::from(out.code as u8)
}
