fn main() {
    std::process::exit(sw1pers::cli::run(std::env::args_os()));
}
