fn main() {
    std::process::exit(l1basis::cli::run());
}
