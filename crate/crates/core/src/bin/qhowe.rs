fn main() {
    std::process::exit(qhowe::harness::run_cli(std::env::args_os()));
}
