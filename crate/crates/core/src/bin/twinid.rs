fn main() -> std::process::ExitCode {
    twinid::cli::main()
}
