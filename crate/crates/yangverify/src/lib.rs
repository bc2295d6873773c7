//! Command-line front end: expression parser, suite runner, reports and REPL.

pub mod parser;
pub mod repl;
pub mod report;
pub mod runner;

pub use parser::{normalize, parse_expression, pretty, ExpressionAst, ParseError};
pub use report::{Format, ReportDocument, Verdict, SCHEMA};
pub use runner::{run_suite, ConfigError, RunConfig, Suite};
