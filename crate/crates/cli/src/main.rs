fn main() {
    std::process::exit(ctld_cli::run(std::env::args_os()));
}
