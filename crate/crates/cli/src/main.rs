fn main() {
    std::process::exit(antiramsey::cli::main_with(std::env::args().collect()));
}
