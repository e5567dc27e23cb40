fn main() {
    std::process::exit(alexlab::cli::run_from_args());
}
