fn main() {
    std::process::exit(casimir_bubble::cli::run());
}
