fn main() {
    std::process::exit(tracecode::cli::run(std::env::args_os()));
}
