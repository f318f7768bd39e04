fn main() {
    std::process::exit(gkp_cli::run());
}
