fn main() {
    std::process::exit(uacg::cli::run(std::env::args_os()));
}
