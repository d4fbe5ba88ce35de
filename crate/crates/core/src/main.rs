fn main() {
    std::process::exit(qspec::cli::main_with_args(std::env::args_os()));
}
