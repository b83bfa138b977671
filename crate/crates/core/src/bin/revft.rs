fn main() {
    std::process::exit(revft::cli::run(std::env::args_os()));
}
