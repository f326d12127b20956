fn main() {
    std::process::exit(ncloop::cli::run(std::env::args_os()));
}
