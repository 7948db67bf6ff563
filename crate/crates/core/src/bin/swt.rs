fn main() -> std::process::ExitCode {
    swt::cli::main()
}
