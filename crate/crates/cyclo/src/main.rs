fn main() {
    std::process::exit(cyclo::cli::run_cli(std::env::args_os()));
}
