use clap::Parser;
use fes_ilo::cli::{init_threads, run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    if let Err(e) = init_threads().and_then(|()| run(&config)) {
        eprintln!("fes-ilo: {e}");
        std::process::exit(e.exit_code());
    }
}
