fn main() {
    std::process::exit(gysin::cli::run(std::env::args_os()));
}
