fn main() {
    std::process::exit(hopf_core::cli::run(std::env::args_os()));
}
