fn main() {
    std::process::exit(trirule::cli::run(std::env::args_os()));
}
