fn main() {
    std::process::exit(diagonal::cli::cli_main(std::env::args_os()));
}
