fn main() {
    std::process::exit(tautilt_cli::run(std::env::args_os()));
}
