fn main() {
    std::process::exit(primlab::cli::run(std::env::args_os()));
}
