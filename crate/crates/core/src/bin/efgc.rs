fn main() {
    std::process::exit(efgc::cli::run(std::env::args_os()));
}
