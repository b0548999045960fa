fn main() {
    std::process::exit(cedct::cli::main_with_args(std::env::args_os()));
}
