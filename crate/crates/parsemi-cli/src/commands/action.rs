use parsemi::crossed::{associativity_suite, CrossedProduct as CrossedProductBundle};
use parsemi::report::{Check, Report};
use parsemi::textio::algebra_to_text;

use crate::args::{CliError, RunContext};
use crate::registry::CheckCommand;

pub struct VerifyAction;

impl CheckCommand for VerifyAction {
    fn name(&self) -> &'static str {
        "verify-action"
    }

    fn about(&self) -> &'static str {
        "Check the partial-action axioms of an action file"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let action = ctx.require_action()?;
        let mut report = Report::new(self.name());
        report.dim("semigroup elements", action.semigroup().size());
        report.dim("base", action.algebra().dim());
        for s in action.semigroup().elements() {
            report.dim(format!("X_{s}"), action.ideal(s).dim());
        }
        report.extend(action.verify());
        Ok(report)
    }
}

pub struct CrossedProduct;

impl CheckCommand for CrossedProduct {
    fn name(&self) -> &'static str {
        "crossed-product"
    }

    fn about(&self) -> &'static str {
        "Build L, the relation ideal and the quotient; --out dumps the quotient algebra"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let action = ctx.require_action()?;
        let mut report = Report::new(self.name());
        match CrossedProductBundle::build(&action) {
            Ok(crossed) => {
                report.dim("L", crossed.formal_algebra().dim());
                report.dim("I", crossed.relation_ideal().dim());
                report.dim("quotient", crossed.quotient().dim());
                let (ok, witness) = parsemi::crossed::associativity_report(crossed.quotient());
                report.push(if ok {
                    Check::pass("quotient associative")
                } else {
                    Check::fail("quotient associative", format!("witness {:?}", witness.unwrap()))
                });
                ctx.write_out(&algebra_to_text(crossed.quotient()))?;
            }
            Err(e) => report.fail("crossed product construction", e.to_string()),
        }
        Ok(report)
    }
}

pub struct CheckTheorem11;

impl CheckCommand for CheckTheorem11 {
    fn name(&self) -> &'static str {
        "check-thm-1.1"
    }

    fn about(&self) -> &'static str {
        "Per-carrier (L,R)-associativity hypothesis vs crossed-product associativity"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let action = ctx.require_action()?;
        let mut report = Report::new(self.name());
        match associativity_suite(&action) {
            Ok(suite) => {
                for carrier in &suite.carriers {
                    report.dim(format!("X_{}", carrier.element), carrier.dim);
                    report.push(Check::pass(format!(
                        "X_{} (L,R)-associative: {}",
                        carrier.element, carrier.lr_associative
                    )));
                }
                let (l, i, q) = suite.dims;
                report.dim("L", l);
                report.dim("I", i);
                report.dim("quotient", q);
                report.push(Check::pass(format!(
                    "crossed product associative: {}",
                    suite.crossed_associative
                )));
                report.push(if suite.implication_ok {
                    Check::pass("theorem 1.1 implication")
                } else {
                    Check::fail(
                        "theorem 1.1 implication",
                        format!("witness {:?}", suite.associativity_witness),
                    )
                });
            }
            Err(e) => report.fail("suite construction", e.to_string()),
        }
        Ok(report)
    }
}

pub struct CheckCorollary12;

impl CheckCommand for CheckCorollary12 {
    fn name(&self) -> &'static str {
        "check-cor-1.2"
    }

    fn about(&self) -> &'static str {
        "Idempotent/non-degenerate carriers imply an associative crossed product"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let action = ctx.require_action()?;
        let mut report = Report::new(self.name());
        match associativity_suite(&action) {
            Ok(suite) => {
                for carrier in &suite.carriers {
                    report.push(Check::pass(format!(
                        "X_{}: idempotent {}, nondegenerate {}",
                        carrier.element,
                        carrier.diagnostics.idempotent,
                        carrier.diagnostics.nondegenerate
                    )));
                }
                report.push(Check::pass(format!(
                    "crossed product associative: {}",
                    suite.crossed_associative
                )));
                report.push(if suite.corollary_1_2_ok {
                    Check::pass("corollary 1.2 implication")
                } else {
                    Check::fail(
                        "corollary 1.2 implication",
                        format!("witness {:?}", suite.associativity_witness),
                    )
                });
            }
            Err(e) => report.fail("suite construction", e.to_string()),
        }
        Ok(report)
    }
}

pub struct CheckCorollary14;

impl CheckCommand for CheckCorollary14 {
    fn name(&self) -> &'static str {
        "check-cor-1.4"
    }

    fn about(&self) -> &'static str {
        "Semiprime base: every sampled action yields an associative crossed product"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let algebra = ctx.require_algebra()?;
        let mut report = Report::new(self.name());
        report.dim("base", algebra.dim());
        let semiprime = match algebra.is_semiprime() {
            Ok(v) => v,
            Err(e) => {
                report.fail("semiprimeness", e.to_string());
                return Ok(report);
            }
        };
        report.push(if semiprime {
            Check::pass("base algebra semiprime")
        } else {
            Check::fail("base algebra semiprime", "corollary hypothesis fails")
        });
        if !semiprime {
            return Ok(report);
        }
        let actions =
            parsemi::corpus::actions_over_algebra(&algebra, ctx.seed, ctx.corpus_size);
        report.dim("actions sampled", actions.len());
        for (label, action) in actions {
            match parsemi::crossed::CrossedProduct::build(&action) {
                Ok(crossed) => {
                    let (ok, witness) = parsemi::crossed::associativity_report(crossed.quotient());
                    report.push(if ok {
                        Check::pass(format!("associative: {label}"))
                    } else {
                        Check::fail(
                            format!("associative: {label}"),
                            format!("witness {:?}", witness.unwrap()),
                        )
                    });
                }
                Err(e) => report.fail(format!("associative: {label}"), e.to_string()),
            }
        }
        Ok(report)
    }
}
