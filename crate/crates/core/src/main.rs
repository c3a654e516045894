fn main() {
    std::process::exit(schubert_aut::cli::run(std::env::args().skip(1)));
}
