fn main() {
    let code = ncrowmotion::cli::main(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
