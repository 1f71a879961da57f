use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::model::{
    Activity, AssessmentResult, Assessor, CascadeTrace, CmmLevel, ComparisonRecord, GroupScore,
    GroupTrace, NodeInput, Question, QuestionId, QuestionnaireSchema, Sensitivity,
};

pub const OVERALL_TITLE: &str = "Software Product Line Process Assessment";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Machine,
}

/// Scores are shown with exactly two decimals.
pub fn format_score(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".to_owned()
    } else {
        s
    }
}

/// A score with its classification, as it appears in machine documents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreRecord {
    /// Full-precision crisp value.
    pub score: f64,
    /// Two-decimal presentation of `score`.
    pub rounded: String,
    pub label: String,
    pub terms: Vec<String>,
    pub levels: Vec<CmmLevel>,
    pub level_label: String,
}

impl From<&GroupScore> for ScoreRecord {
    fn from(g: &GroupScore) -> Self {
        let c = &g.classification;
        Self {
            score: g.score,
            rounded: format_score(g.score),
            label: c.label.clone(),
            terms: c.terms.clone(),
            levels: c.levels.clone(),
            level_label: c.level_label.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        Self {
            name: "splpat".into(),
            version: crate::VERSION.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub declared_cmm: CmmLevel,
    pub fuzzy_agrees: bool,
    pub average_agrees: bool,
}

/// Machine-readable assessment report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub tool: ToolInfo,
    pub organization: String,
    pub core_asset: ScoreRecord,
    pub product_development: ScoreRecord,
    pub management: ScoreRecord,
    pub overall: ScoreRecord,
    pub baseline: ScoreRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Agreement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<CascadeTrace>,
}

impl ReportDocument {
    pub fn new(result: &AssessmentResult, include_trace: bool) -> Self {
        let comparison = Assessor::comparison(result, result.declared_cmm);
        let agreement = comparison.declared_cmm.map(|declared_cmm| Agreement {
            declared_cmm,
            fuzzy_agrees: comparison.fuzzy_agrees == Some(true),
            average_agrees: comparison.average_agrees == Some(true),
        });
        Self {
            tool: ToolInfo::default(),
            organization: result.organization.clone(),
            core_asset: (&result.core_asset).into(),
            product_development: (&result.product_development).into(),
            management: (&result.management).into(),
            overall: (&result.overall).into(),
            baseline: (&result.baseline).into(),
            agreement,
            trace: include_trace.then(|| result.trace.clone()),
        }
    }
}

/// `ReportDocument` plus the what-if map, as returned by the HTTP API.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssessResponse {
    #[serde(flatten)]
    pub report: ReportDocument,
    pub sensitivity: Sensitivity,
}

// `ReportDocument` rejects unknown fields, which rules out a derived
// `flatten` on this side; split the object by hand instead.
impl<'de> Deserialize<'de> for AssessResponse {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let mut map = serde_json::Map::deserialize(deserializer)?;
        let sensitivity = map
            .remove("sensitivity")
            .ok_or_else(|| D::Error::missing_field("sensitivity"))?;
        Ok(Self {
            report: serde_json::from_value(map.into()).map_err(D::Error::custom)?,
            sensitivity: serde_json::from_value(sensitivity).map_err(D::Error::custom)?,
        })
    }
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}

pub fn render_report(
    result: &AssessmentResult,
    format: ReportFormat,
    include_trace: bool,
) -> String {
    match format {
        ReportFormat::Machine => to_json_pretty(&ReportDocument::new(result, include_trace)),
        ReportFormat::Text => {
            let mut out = render_text(result);
            if include_trace {
                out.push('\n');
                out.push_str(&render_trace(&result.trace));
            }
            out
        }
    }
}

fn table_row(out: &mut String, cells: &[&str]) {
    let _ = writeln!(out, "| {} |", cells.join(" | "));
}

fn score_row(out: &mut String, title: &str, g: &GroupScore) {
    let c = &g.classification;
    table_row(
        out,
        &[title, &format_score(g.score), &c.label, &c.level_label],
    );
}

fn organization_line(out: &mut String, organization: &str) {
    if !organization.is_empty() {
        let _ = writeln!(out, "Organization: {organization}");
    }
}

pub fn render_text(result: &AssessmentResult) -> String {
    let mut out = String::from("Software product line process assessment\n");
    organization_line(&mut out, &result.organization);
    out.push('\n');
    table_row(
        &mut out,
        &["Activity", "Result", "Linguistic Output", "CMM Level"],
    );
    table_row(&mut out, &["---", "---:", "---", "---"]);
    for activity in Activity::ALL {
        score_row(
            &mut out,
            activity.assessment_title(),
            result.activity(activity),
        );
    }
    score_row(&mut out, OVERALL_TITLE, &result.overall);
    out.push('\n');
    out.push_str(&render_comparison(&Assessor::comparison(
        result,
        result.declared_cmm,
    )));
    out
}

fn yes_no(flag: Option<bool>) -> &'static str {
    match flag {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

/// Method comparison table: statistical average, fuzzy cascade and (when known) the declared level.
pub fn render_comparison(c: &ComparisonRecord) -> String {
    let mut out = String::from("Method comparison\n\n");
    let declared = c.declared_cmm;
    let mut header = vec!["Method", "Result", "Linguistic Output", "CMM Level"];
    let mut rule = vec!["---", "---:", "---", "---"];
    if declared.is_some() {
        header.push("Agrees With Declared");
        rule.push("---");
    }
    table_row(&mut out, &header);
    table_row(&mut out, &rule);
    for (name, g, agrees) in [
        ("Statistical Average", &c.average, c.average_agrees),
        ("Fuzzy Calculation", &c.fuzzy, c.fuzzy_agrees),
    ] {
        let score = format_score(g.score);
        let mut cells = vec![
            name,
            &score,
            &g.classification.label,
            &g.classification.level_label,
        ];
        if declared.is_some() {
            cells.push(yes_no(agrees));
        }
        table_row(&mut out, &cells);
    }
    if let Some(level) = declared {
        table_row(
            &mut out,
            &["Declared CMM", "-", level.name(), &level.to_string(), "-"],
        );
    }
    out
}

fn group_title(g: &GroupTrace) -> &str {
    Activity::ALL
        .iter()
        .find(|a| a.key() == g.group)
        .map_or(OVERALL_TITLE, |a| a.assessment_title())
}

/// Indented reduction trees with the firing strengths and clip levels of every node.
pub fn render_trace(trace: &CascadeTrace) -> String {
    let mut out = String::from("Cascade trace\n");
    for g in trace.groups() {
        let _ = writeln!(
            out,
            "\n{} -> {} (tree {})",
            group_title(g),
            format_score(g.output),
            g.tree
        );
        render_input(
            &mut out,
            g,
            &NodeInput {
                source: g.root().to_owned(),
                value: g.output,
            },
            1,
        );
    }
    out
}

fn render_input(out: &mut String, g: &GroupTrace, input: &NodeInput, depth: usize) {
    let pad = "  ".repeat(depth);
    let Some(node) = g.node(&input.source) else {
        let _ = writeln!(out, "{pad}{} = {}", input.source, format_score(input.value));
        return;
    };
    let _ = writeln!(
        out,
        "{pad}{} [stage {}] {} {} & {} {} -> {}",
        node.id,
        node.stage,
        node.left.source,
        format_score(node.left.value),
        node.right.source,
        format_score(node.right.value),
        format_score(node.output),
    );
    let fired: Vec<_> = node
        .firing
        .iter()
        .filter(|f| f.strength > 0.0)
        .map(|f| format!("{} {:.3}", f.rule, f.strength))
        .collect();
    let clipped: Vec<_> = node
        .clip_levels
        .iter()
        .filter(|t| t.level > 0.0)
        .map(|t| format!("{} {:.3}", t.term, t.level))
        .collect();
    let _ = writeln!(out, "{pad}    fired: {}", fired.join(", "));
    let _ = writeln!(out, "{pad}    clipped: {}", clipped.join(", "));
    render_input(out, g, &node.left, depth + 1);
    render_input(out, g, &node.right, depth + 1);
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActivityEntry {
    pub key: Activity,
    pub name: String,
    pub questions: Vec<QuestionId>,
}

/// Questionnaire as served by `GET /api/schema` and `schema --format machine`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchemaDocument {
    pub scale: (f64, f64),
    pub activities: Vec<ActivityEntry>,
    pub questions: Vec<Question>,
}

impl SchemaDocument {
    pub fn new(schema: &QuestionnaireSchema) -> Self {
        Self {
            scale: crate::model::UNIVERSE,
            activities: Activity::ALL
                .iter()
                .map(|&a| ActivityEntry {
                    key: a,
                    name: a.name().to_owned(),
                    questions: schema.questions_for(a),
                })
                .collect(),
            questions: schema.questions().to_vec(),
        }
    }
}

pub fn render_schema(schema: &QuestionnaireSchema, format: ReportFormat) -> String {
    match format {
        ReportFormat::Machine => to_json_pretty(&SchemaDocument::new(schema)),
        ReportFormat::Text => {
            let mut out = String::new();
            table_row(&mut out, &["Id", "Activity", "Question"]);
            table_row(&mut out, &["---", "---", "---"]);
            for q in schema.questions() {
                table_row(&mut out, &[&q.id.to_string(), q.activity.name(), &q.text]);
            }
            out
        }
    }
}
