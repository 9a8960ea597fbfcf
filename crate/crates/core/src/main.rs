fn main() {
    std::process::exit(lgr_core::cli::main_with_args(std::env::args_os()));
}
