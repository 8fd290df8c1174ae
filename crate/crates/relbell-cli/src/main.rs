fn main() {
    std::process::exit(relbell_cli::run());
}
