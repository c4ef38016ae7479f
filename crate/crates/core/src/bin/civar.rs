fn main() {
    let (out, code) = civariety::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
