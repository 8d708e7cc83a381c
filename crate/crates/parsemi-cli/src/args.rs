//! Shared flag set and input loading for every registered command.

use std::path::PathBuf;

use clap::{Arg, ArgAction, ArgMatches, Command};
use parsemi::action::PartialAction;
use parsemi::algebra::StructureAlgebra;
use parsemi::expansion::EnumLimits;
use parsemi::rep::PartialRep;
use parsemi::semigroup::InverseSemigroup;
use parsemi::textio;

use std::sync::Arc;

#[derive(Debug)]
pub enum CliError {
    /// Missing or malformed invocation: exit code 2.
    Usage(String),
    /// Unreadable or unparseable input files: exit code 2.
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Input(m) => write!(f, "input error: {m}"),
        }
    }
}

impl From<textio::TextError> for CliError {
    fn from(e: textio::TextError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// One parsed invocation: every command shares this flag set and pulls what
/// it needs, erroring on missing inputs.
pub struct RunContext {
    pub semigroup: Option<PathBuf>,
    pub algebra: Option<PathBuf>,
    pub action: Option<PathBuf>,
    pub rep: Option<PathBuf>,
    pub cap: usize,
    pub seed: u64,
    pub corpus_size: usize,
    pub report_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

/// Attaches the shared flag set to a subcommand definition.
pub fn with_common_flags(cmd: Command) -> Command {
    cmd.arg(Arg::new("semigroup").long("semigroup").value_name("PATH").action(ArgAction::Set))
        .arg(Arg::new("algebra").long("algebra").value_name("PATH").action(ArgAction::Set))
        .arg(Arg::new("action").long("action").value_name("PATH").action(ArgAction::Set))
        .arg(Arg::new("rep").long("rep").value_name("PATH").action(ArgAction::Set))
        .arg(
            Arg::new("cap")
                .long("cap")
                .value_name("N")
                .default_value("10000")
                .value_parser(clap::value_parser!(usize)),
        )
        .arg(
            Arg::new("seed")
                .long("seed")
                .value_name("N")
                .default_value("0")
                .value_parser(clap::value_parser!(u64)),
        )
        .arg(
            Arg::new("corpus-size")
                .long("corpus-size")
                .value_name("N")
                .default_value("50")
                .value_parser(clap::value_parser!(usize)),
        )
        .arg(Arg::new("report").long("report").value_name("PATH").action(ArgAction::Set))
        .arg(
            Arg::new("format")
                .long("format")
                .value_name("FORMAT")
                .default_value("text")
                .value_parser(["text", "json"]),
        )
        .arg(Arg::new("out").long("out").value_name("PATH").action(ArgAction::Set))
}

impl RunContext {
    pub fn from_matches(matches: &ArgMatches) -> Self {
        let path = |key: &str| matches.get_one::<String>(key).map(PathBuf::from);
        RunContext {
            semigroup: path("semigroup"),
            algebra: path("algebra"),
            action: path("action"),
            rep: path("rep"),
            cap: *matches.get_one::<usize>("cap").unwrap(),
            seed: *matches.get_one::<u64>("seed").unwrap(),
            corpus_size: *matches.get_one::<usize>("corpus-size").unwrap(),
            report_path: path("report"),
            format: match matches.get_one::<String>("format").unwrap().as_str() {
                "json" => OutputFormat::Json,
                _ => OutputFormat::Text,
            },
            out: path("out"),
        }
    }

    pub fn limits(&self) -> EnumLimits {
        EnumLimits::with_max_elements(self.cap)
    }

    pub fn require_semigroup(&self) -> Result<Arc<InverseSemigroup>, CliError> {
        let path = self
            .semigroup
            .as_ref()
            .ok_or_else(|| CliError::Usage("--semigroup <PATH> is required".into()))?;
        Ok(textio::load_semigroup(path)?)
    }

    /// The raw table behind `--semigroup`, for axiom reporting.
    pub fn require_semigroup_table(&self) -> Result<textio::RawTable, CliError> {
        let path = self
            .semigroup
            .as_ref()
            .ok_or_else(|| CliError::Usage("--semigroup <PATH> is required".into()))?;
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))?;
        Ok(textio::parse_semigroup_table(&text)?)
    }

    pub fn require_algebra(&self) -> Result<Arc<StructureAlgebra>, CliError> {
        let path = self
            .algebra
            .as_ref()
            .ok_or_else(|| CliError::Usage("--algebra <PATH> is required".into()))?;
        Ok(textio::load_algebra(path)?)
    }

    pub fn require_action(&self) -> Result<PartialAction, CliError> {
        let path = self
            .action
            .as_ref()
            .ok_or_else(|| CliError::Usage("--action <PATH> is required".into()))?;
        Ok(textio::load_action(path)?)
    }

    pub fn require_rep(&self) -> Result<PartialRep, CliError> {
        let path = self
            .rep
            .as_ref()
            .ok_or_else(|| CliError::Usage("--rep <PATH> is required".into()))?;
        Ok(textio::load_rep(path)?)
    }

    pub fn write_out(&self, content: &str) -> Result<(), CliError> {
        if let Some(path) = &self.out {
            std::fs::write(path, content)
                .map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))?;
        }
        Ok(())
    }
}
