fn main() {
    std::process::exit(gemkit::cli::run(std::env::args_os()));
}
