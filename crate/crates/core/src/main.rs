fn main() {
    std::process::exit(disc_analysis::cli::run(std::env::args_os()));
}
