fn main() {
    std::process::exit(digifix::cli::run());
}
