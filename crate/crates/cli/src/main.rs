use clap::Parser;
use ontoalign::commands::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let level = if cli.quiet { "warn" } else { "info" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
    if let Err(failure) = run(&cli) {
        log::error!("{failure}");
        std::process::exit(failure.exit_code());
    }
}
