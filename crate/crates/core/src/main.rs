fn main() {
    std::process::exit(dyh::cli::main_with_args(std::env::args_os()));
}
