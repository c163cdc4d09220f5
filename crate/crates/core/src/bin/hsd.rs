fn main() {
    std::process::exit(hsd::cli::run(std::env::args_os()));
}
