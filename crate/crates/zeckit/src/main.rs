fn main() {
    std::process::exit(zeckit::cli::run(std::env::args_os()));
}
