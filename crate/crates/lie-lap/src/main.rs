use clap::Parser;
use lie_lap::commands::{emit, run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match run(cli).and_then(|outcome| emit(&outcome).map(|()| outcome.code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code as i32);
}
