fn main() -> std::process::ExitCode {
    howe::cli::main()
}
