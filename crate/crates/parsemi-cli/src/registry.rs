//! The command registry: every check is a strategy behind one trait,
//! registered by name and selected at runtime from the CLI.

use parsemi::report::Report;

use crate::args::{CliError, RunContext};
use crate::commands;

pub trait CheckCommand: Sync {
    /// Subcommand name as typed on the command line.
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn run(&self, ctx: &RunContext) -> Result<Report, CliError>;
}

/// All registered commands, in the order they appear in help output.
pub fn all() -> Vec<Box<dyn CheckCommand>> {
    vec![
        Box::new(commands::semigroup::VerifySemigroup),
        Box::new(commands::action::VerifyAction),
        Box::new(commands::action::CrossedProduct),
        Box::new(commands::action::CheckTheorem11),
        Box::new(commands::action::CheckCorollary12),
        Box::new(commands::action::CheckCorollary14),
        Box::new(commands::rep::VerifyRep),
        Box::new(commands::rep::CheckLemma21),
        Box::new(commands::rep::CheckLemma23),
        Box::new(commands::rep::CheckLemma24),
        Box::new(commands::rep::CheckProp25),
        Box::new(commands::expansion::BuildPr),
        Box::new(commands::expansion::BuildKpar),
        Box::new(commands::expansion::CheckTheorem27),
        Box::new(commands::corpus::Corpus),
    ]
}

pub fn find(name: &str) -> Option<Box<dyn CheckCommand>> {
    all().into_iter().find(|c| c.name() == name)
}
