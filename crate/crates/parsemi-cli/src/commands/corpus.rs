use parsemi::report::Report;

use crate::args::{CliError, RunContext};
use crate::registry::CheckCommand;

pub struct Corpus;

impl CheckCommand for Corpus {
    fn name(&self) -> &'static str {
        "corpus"
    }

    fn about(&self) -> &'static str {
        "Run the associativity suites over a seeded randomized instance corpus"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        Ok(parsemi::corpus::corpus_report(ctx.seed, ctx.corpus_size))
    }
}
