fn main() {
    std::process::exit(meshcap::harness::cli_main(std::env::args()));
}
