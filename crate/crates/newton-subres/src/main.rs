fn main() {
    std::process::exit(newton_subres::cli::run());
}
