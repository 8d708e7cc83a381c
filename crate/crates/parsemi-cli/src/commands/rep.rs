use parsemi::crossed::CrossedProduct;
use parsemi::rep::{action_from_rep, phi_hom, rep_from_action, rep_quotient};
use parsemi::report::{Check, Report};

use crate::args::{CliError, RunContext};
use crate::registry::CheckCommand;

pub struct VerifyRep;

impl CheckCommand for VerifyRep {
    fn name(&self) -> &'static str {
        "verify-rep"
    }

    fn about(&self) -> &'static str {
        "Check the partial-representation identities of a rep file"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let rep = ctx.require_rep()?;
        let mut report = Report::new(self.name());
        report.dim("semigroup elements", rep.semigroup().size());
        report.dim("target", rep.target().dim());
        match rep.verify() {
            Ok(axioms) => report.extend(axioms),
            Err(e) => report.fail("target sanity", e.to_string()),
        }
        Ok(report)
    }
}

pub struct CheckLemma21;

impl CheckCommand for CheckLemma21 {
    fn name(&self) -> &'static str {
        "check-lemma-2.1"
    }

    fn about(&self) -> &'static str {
        "Unital carriers: s ↦ 1_sδ_s is a partial representation of the crossed product"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let action = ctx.require_action()?;
        let mut report = Report::new(self.name());
        match rep_from_action(&action) {
            Ok((crossed, rep)) => {
                report.dim("quotient", crossed.quotient().dim());
                report.push(Check::pass("carriers unital"));
                match rep.verify() {
                    Ok(axioms) => report.extend(axioms),
                    Err(e) => report.fail("induced representation", e.to_string()),
                }
            }
            Err(e) => report.fail("hypothesis", e.to_string()),
        }
        Ok(report)
    }
}

pub struct CheckLemma23;

impl CheckCommand for CheckLemma23 {
    fn name(&self) -> &'static str {
        "check-lemma-2.3"
    }

    fn about(&self) -> &'static str {
        "The ε_s = π(s)π(s*) calculus: idempotent, commuting, shift identity"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let rep = ctx.require_rep()?;
        let mut report = Report::new(self.name());
        match rep.verify() {
            Ok(axioms) if axioms.passed() => {
                report.extend(axioms);
                report.extend(rep.epsilon_calculus_report());
            }
            Ok(axioms) => report.extend(axioms),
            Err(e) => report.fail("target sanity", e.to_string()),
        }
        Ok(report)
    }
}

pub struct CheckLemma24;

impl CheckCommand for CheckLemma24 {
    fn name(&self) -> &'static str {
        "check-lemma-2.4"
    }

    fn about(&self) -> &'static str {
        "Derive the partial action α_s(a) = π(s)aπ(s*) and verify its axioms"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let rep = ctx.require_rep()?;
        let mut report = Report::new(self.name());
        match action_from_rep(&rep) {
            Ok(derived) => {
                report.dim("A", derived.action.algebra().dim());
                for s in derived.action.semigroup().elements() {
                    report.dim(format!("X_{s}"), derived.action.ideal(s).dim());
                }
                report.extend(derived.action.verify());
            }
            Err(e) => report.fail("derivation", e.to_string()),
        }
        Ok(report)
    }
}

pub struct CheckProp25;

impl CheckCommand for CheckProp25 {
    fn name(&self) -> &'static str {
        "check-prop-2.5"
    }

    fn about(&self) -> &'static str {
        "Quotient by the order ideal and verify Σ a_sδ_s ↦ Σ a_sπ̃(s) is a homomorphism"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let rep = ctx.require_rep()?;
        let mut report = Report::new(self.name());
        let rq = match rep_quotient(&rep) {
            Ok(rq) => rq,
            Err(e) => {
                report.fail("order-ideal quotient", e.to_string());
                return Ok(report);
            }
        };
        report.dim("J", rq.ideal.dim());
        report.dim("B/J", rq.quotient.dim());
        let derived = match action_from_rep(&rq.pi_tilde) {
            Ok(d) => d,
            Err(e) => {
                report.fail("derived action", e.to_string());
                return Ok(report);
            }
        };
        report.dim("A", derived.action.algebra().dim());
        let crossed = match CrossedProduct::build(&derived.action) {
            Ok(c) => c,
            Err(e) => {
                report.fail("crossed product", e.to_string());
                return Ok(report);
            }
        };
        report.dim("crossed product", crossed.quotient().dim());
        match phi_hom(&rq, &derived, &crossed) {
            Ok((_, checks)) => report.extend(checks),
            Err(e) => report.fail("comparison homomorphism", e.to_string()),
        }
        Ok(report)
    }
}
