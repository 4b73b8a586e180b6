fn main() {
    std::process::exit(facering::cli::run(std::env::args_os()));
}
