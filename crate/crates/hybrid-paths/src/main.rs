fn main() {
    std::process::exit(hybrid_paths::cli::run_from_env());
}
