//! Command-line front end for shiftlab-core.

pub mod args;
pub mod commands;
pub mod input;
pub mod suite;

pub use args::Cli;
pub use commands::{run, Outcome};

/// Parse `args` (including the program name) and run the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    exit: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    exit: commands::EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}
