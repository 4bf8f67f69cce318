use std::io::Write;

fn main() {
    let (text, code) = emtensor::cli::main_with_args(std::env::args_os());
    // A closed pipe downstream is not an error worth reporting.
    if code == emtensor::cli::EXIT_PARSE && !text.trim_start().starts_with('{') {
        let _ = write!(std::io::stderr(), "{text}");
    } else {
        let _ = writeln!(std::io::stdout(), "{}", text.trim_end());
    }
    std::process::exit(code);
}
