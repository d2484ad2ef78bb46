use clap::Parser;

fn main() {
    let cli = multgen_cli::Cli::parse();
    std::process::exit(multgen_cli::run(cli));
}
