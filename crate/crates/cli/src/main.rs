use std::io::Write;

fn main() {
    let result = gassmann_cli::run(std::env::args_os().skip(1));
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(result.exit_code);
}
