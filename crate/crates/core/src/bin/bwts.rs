fn main() {
    std::process::exit(bwts::cli::run());
}
