fn main() {
    std::process::exit(statcheck::cli::run(std::env::args()));
}
