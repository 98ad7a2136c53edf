fn main() {
    std::process::exit(skolem_cli::run(std::env::args_os()));
}
