fn main() {
    std::process::exit(spirals::cli::run());
}
