use std::io;
use std::process;

use franklin::cli::{self, Config};

fn main() {
    let config = match Config::from_env() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("franklin: {msg}");
            process::exit(cli::EXIT_USAGE);
        }
    };
    let code = cli::run(
        std::env::args_os(),
        &config,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    process::exit(code);
}
