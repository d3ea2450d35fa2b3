//! Input parsing, analysis orchestration and report rendering for the `nkoszul` command.

pub mod input;
pub mod render;
pub mod report;

pub use input::{document_of, parse_input, FieldSpec, InputDocument};
pub use report::{run_report, Analysis, Budgets, Outcome, Report};
