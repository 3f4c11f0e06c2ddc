use clap::Parser;
use orbital_ac::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (code, out) = run(&cli.command);
    if code == 0 || code == 1 {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    std::process::exit(code);
}
