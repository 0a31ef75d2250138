fn main() -> std::process::ExitCode {
    prokit::cli::main()
}
