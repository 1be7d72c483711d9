fn main() -> std::process::ExitCode {
    gndb::cli::main()
}
