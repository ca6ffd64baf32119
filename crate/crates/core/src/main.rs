fn main() {
    std::process::exit(permkit::cli::run(std::env::args_os()));
}
