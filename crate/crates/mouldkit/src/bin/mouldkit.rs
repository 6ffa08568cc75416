fn main() { std::process::exit(mouldkit::cli::run(std::env::args().skip(1))); }
