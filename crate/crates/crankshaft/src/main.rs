fn main() {
    std::process::exit(crankshaft::cli::run());
}
