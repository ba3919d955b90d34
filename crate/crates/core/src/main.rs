fn main() {
    std::process::exit(conormal::cli::run(std::env::args_os()));
}
