//! Answer-sheet documents and assessment report rendering.

mod document;
mod render;

pub use document::{
    parse_answer_sheet, parse_assess_request, render_answer_sheet, AnswerSheetDocument,
    AssessRequest, DocumentError, OrderedAnswers, DEFAULT_SENSITIVITY_DELTA,
};
pub use render::{
    format_score, render_comparison, render_report, render_schema, render_text, render_trace,
    to_json_pretty, ActivityEntry, Agreement, AssessResponse, ReportDocument, ReportFormat,
    SchemaDocument, ScoreRecord, ToolInfo, OVERALL_TITLE,
};
