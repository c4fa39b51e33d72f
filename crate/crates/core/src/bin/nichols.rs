fn main() {
    std::process::exit(nichols_core::cli::run(std::env::args_os()));
}
