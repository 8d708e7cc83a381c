//! `parsemi` — exact verification of crossed products, partial actions and
//! partial representations of finite inverse semigroups.
//!
//! Every subcommand is a strategy registered by name; the dispatcher builds
//! the clap interface from the registry and selects the implementation at
//! runtime. Exit codes: 0 when every check passes, 1 on a failed check or an
//! exceeded enumeration cap, 2 on usage or input errors.

mod args;
mod commands;
mod registry;

use args::{OutputFormat, RunContext};

fn main() {
    let mut app = clap::Command::new("parsemi")
        .about("Exact checks for crossed products of partial inverse-semigroup actions")
        .subcommand_required(true)
        .arg_required_else_help(true);
    for command in registry::all() {
        app = app.subcommand(args::with_common_flags(
            clap::Command::new(command.name()).about(command.about()),
        ));
    }
    // clap exits with code 2 on unknown commands or flags
    let matches = app.get_matches();
    let (name, sub) = matches.subcommand().expect("subcommand required");
    let command = registry::find(name).expect("registered name");
    let ctx = RunContext::from_matches(sub);

    match command.run(&ctx) {
        Ok(report) => {
            let rendered = match ctx.format {
                OutputFormat::Text => report.render_text(),
                OutputFormat::Json => report.render_json(),
            };
            print!("{rendered}");
            if let Some(path) = &ctx.report_path {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("failed to write report {}: {}", path.display(), e);
                    std::process::exit(2);
                }
            }
            std::process::exit(report.exit_code());
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }
}
