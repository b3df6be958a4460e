fn main() {
    std::process::exit(cerenkov::cli::main_with_args(std::env::args_os()));
}
