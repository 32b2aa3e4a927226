fn main() {
    std::process::exit(ec_cli::run(std::env::args_os()));
}
