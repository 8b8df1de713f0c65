fn main() {
    std::process::exit(rrlrc::cli::main());
}
