fn main() {
    std::process::exit(algint::cli::run(std::env::args_os()));
}
