fn main() {
    std::process::exit(mzvis_cli::run(std::env::args_os()));
}
