//! Line-oriented session files: parsing, execution and reports.

mod exec;
mod parse;
mod report;

pub use exec::execute;
pub use parse::{
    parse_polynomial, parse_session, parse_session_with, Analysis, FreeDecl, ModuleDecl, Overrides, Session,
    SessionFlavor, SessionOptions, SubmoduleDecl, COMMANDS, DEFAULT_MAX_HOMDEG, DEFAULT_REGULARITY_BOUND,
    DEFAULT_TRUNCATION,
};
pub use report::{CommandResult, Provenance, Report, SessionSummary};

/// Parse and run a session text.
pub fn run_text(text: &str, overrides: &Overrides) -> crate::Result<Report> {
    execute(&parse_session_with(text, overrides)?)
}
