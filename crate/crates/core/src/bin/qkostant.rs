fn main() {
    std::process::exit(qkostant::cli::run(std::env::args_os()));
}
