use parsemi::expansion::{enumerate_fp_semigroup, kpar, pr_presentation, theorem_2_7_pipeline, EnumStatus};
use parsemi::report::{Check, Report};
use parsemi::textio::algebra_to_text;

use crate::args::{CliError, RunContext};
use crate::registry::CheckCommand;

pub struct BuildPr;

impl CheckCommand for BuildPr {
    fn name(&self) -> &'static str {
        "build-pr"
    }

    fn about(&self) -> &'static str {
        "Enumerate the expansion semigroup on generators [s]; --out dumps its table"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let sg = ctx.require_semigroup()?;
        let mut report = Report::new(self.name());
        let presentation = pr_presentation(&sg);
        report.dim("generators", presentation.generator_count);
        report.dim("relations", presentation.relations.len());
        let enumerated = enumerate_fp_semigroup(&presentation, &ctx.limits());
        if enumerated.status != EnumStatus::Complete {
            report.cap_exceeded();
            return Ok(report);
        }
        report.dim("elements", enumerated.size());
        report.extend(enumerated.verify(&presentation));
        if ctx.out.is_some() {
            let rows: Vec<Vec<usize>> = (0..enumerated.size())
                .map(|a| (0..enumerated.size()).map(|b| enumerated.mul(a, b)).collect())
                .collect();
            let unit = (0..enumerated.size()).find(|&u| {
                (0..enumerated.size())
                    .all(|x| enumerated.mul(u, x) == x && enumerated.mul(x, u) == x)
            });
            let mut text = format!("n {}\n", enumerated.size());
            if let Some(u) = unit {
                text.push_str(&format!("unit {}\n", u));
            }
            for row in rows {
                let line: Vec<String> = row.iter().map(usize::to_string).collect();
                text.push_str(&line.join(" "));
                text.push('\n');
            }
            ctx.write_out(&text)?;
        }
        Ok(report)
    }
}

pub struct BuildKpar;

impl CheckCommand for BuildKpar {
    fn name(&self) -> &'static str {
        "build-kpar"
    }

    fn about(&self) -> &'static str {
        "Build the expansion semigroup algebra; --out dumps it in algebra format"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let sg = ctx.require_semigroup()?;
        let mut report = Report::new(self.name());
        let pa = match kpar(&sg, &ctx.limits()) {
            Ok(pa) => pa,
            Err(e) => {
                report.fail("enumeration", e.to_string());
                report.cap_exceeded();
                return Ok(report);
            }
        };
        report.dim("K_par", pa.algebra.dim());
        report.push(if pa.algebra.unit().is_some() {
            Check::pass("algebra unital")
        } else {
            Check::fail("algebra unital", "no two-sided unit found")
        });
        match pa.iota_rep(sg.clone()).and_then(|iota| iota.verify()) {
            Ok(axioms) => report.extend(axioms),
            Err(e) => report.fail("canonical map", e.to_string()),
        }
        ctx.write_out(&algebra_to_text(&pa.algebra))?;
        Ok(report)
    }
}

pub struct CheckTheorem27;

impl CheckCommand for CheckTheorem27 {
    fn name(&self) -> &'static str {
        "check-thm-2.7"
    }

    fn about(&self) -> &'static str {
        "Full comparison pipeline: the crossed product of the derived action matches K_par/J"
    }

    fn run(&self, ctx: &RunContext) -> Result<Report, CliError> {
        let sg = ctx.require_semigroup()?;
        let mut report = Report::new(self.name());
        if sg.unit().is_none() {
            report.fail("unital semigroup", "the pipeline requires a declared unit");
            return Ok(report);
        }
        match theorem_2_7_pipeline(&sg, &ctx.limits()) {
            Ok(pipeline) => {
                report.dim("expansion elements", pipeline.expansion_size);
                report.dim("K_par", pipeline.kpar_dim);
                report.dim("J", pipeline.relation_ideal_dim);
                report.dim("K_par/J", pipeline.quotient_dim);
                report.dim("A", pipeline.subalgebra_dim);
                for (s, d) in pipeline.carrier_dims.iter().enumerate() {
                    report.dim(format!("X_{s}"), *d);
                }
                report.dim("L", pipeline.formal_dim);
                report.dim("I", pipeline.crossed_ideal_dim);
                report.dim("crossed product", pipeline.crossed_dim);
                report.extend(pipeline.checks);
            }
            Err(parsemi::expansion::ExpansionError::CapExceeded { .. }) => {
                report.cap_exceeded();
            }
            Err(e) => report.fail("pipeline", e.to_string()),
        }
        Ok(report)
    }
}
