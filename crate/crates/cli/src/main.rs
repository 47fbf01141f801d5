use clap::Parser;

use gqaoa::commands::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli).and_then(|out| out.emit()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
