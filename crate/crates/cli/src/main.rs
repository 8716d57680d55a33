fn main() {
    std::process::exit(maxplus_cli::run(std::env::args_os()));
}
