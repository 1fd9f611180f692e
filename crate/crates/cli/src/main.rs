use clap::Parser;

fn main() {
    let cli = match chainsaw_cli::Cli::try_parse_from(std::env::args_os()) {
        Ok(cli) => cli,
        // Usage problems exit 2; --help and --version exit 0.
        Err(err) => err.exit(),
    };
    let result = chainsaw_cli::execute(cli);
    if !result.stdout.is_empty() {
        print!("{}", result.stdout);
    }
    if !result.stderr.is_empty() {
        eprint!("{}", result.stderr);
    }
    std::process::exit(result.code);
}
