fn main() {
    std::process::exit(quintic_fields::cli::main_with_args(std::env::args_os()));
}
