fn main() {
    std::process::exit(combinatoria::cli::main());
}
