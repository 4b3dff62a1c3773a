fn main() {
    std::process::exit(seshadri::run(std::env::args_os()));
}
