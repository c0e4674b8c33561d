fn main() { std::process::exit(qpw::cli::run(std::env::args().skip(1).collect())); }
