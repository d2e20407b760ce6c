fn main() {
    std::process::exit(aifam_cli::run(std::env::args_os()));
}
