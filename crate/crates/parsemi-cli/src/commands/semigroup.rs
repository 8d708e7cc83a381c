use parsemi::report::Report;
use parsemi::semigroup::verify_table;

use crate::args::{CliError, RunContext};
use crate::registry::CheckCommand;

pub struct VerifySemigroup;

impl CheckCommand for VerifySemigroup {
    fn name(&self) -> &'static str {
        "verify-semigroup"
    }

    fn about(&self) -> &'static str {
        "Check the inverse-semigroup axioms of a Cayley table, with witnesses"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let (size, rows, unit) = ctx.require_semigroup_table()?;
        let flat: Vec<usize> = rows.iter().flatten().copied().collect();
        let mut report = Report::new(self.name());
        report.dim("elements", size);
        let axioms = verify_table(size, &flat, unit);
        if axioms.passed() {
            let sg = parsemi::semigroup::InverseSemigroup::from_table(&rows, unit)
                .expect("verified table");
            report.dim("idempotents", sg.idempotents().len());
            report.dim("strict order pairs", sg.strict_order_pairs().len());
        }
        report.extend(axioms);
        Ok(report)
    }
}
