//! Report assembly and rendering for the `qstrat` command-line tool.

mod render;
mod report;

pub use render::render_text;
pub use report::{
    build, exit_code, parse_field, AlgebraSummary, CertificateJson, Command, DualSummary, ModuleSummary, Options,
    Report, TwoStepSummary, VertexTable,
};
