fn main() {
    std::process::exit(dqho::cli::run(std::env::args_os()));
}
