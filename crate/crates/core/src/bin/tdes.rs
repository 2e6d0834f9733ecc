fn main() {
    std::process::exit(tdes_engine::cli::main_with_args(std::env::args_os()));
}
