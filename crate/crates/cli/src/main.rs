fn main() {
    std::process::exit(jbounds_cli::run(std::env::args_os()));
}
