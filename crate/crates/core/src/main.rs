fn main() {
    std::process::exit(kancover::cli::run(std::env::args_os()));
}
