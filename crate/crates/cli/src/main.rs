use clap::Parser;

use absperm_cli::args::Cli;
use absperm_cli::{exit, run};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap uses 2 for usage errors; bad flags are config errors here
            let code = if e.use_stderr() { exit::CONFIG } else { exit::OK };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match cli.into_config().and_then(|cfg| run(&cfg)) {
        Ok(()) => exit::OK,
        Err(e) => {
            eprintln!("absperm: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
