//! Problem-file parsing, pipeline orchestration and JSON reports for the `takagi` command.

pub mod commands;
pub mod format;
pub mod problem_file;
pub mod report;

pub use commands::{
    cmd_pick, cmd_solve, cmd_validate, cmd_verify, pick_text, solve_text, validate_text, verify_text, Emit, RunOptions,
};
pub use problem_file::{load, parse_problem, LoadError, Loaded, Overrides, ParseError, ProblemFile};
pub use report::{ReportFile, Status};
