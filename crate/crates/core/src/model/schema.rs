use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// The three software product line activities assessed separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Activity {
    CoreAsset,
    ProductDevelopment,
    Management,
}

impl Activity {
    pub const ALL: [Activity; 3] = [
        Activity::CoreAsset,
        Activity::ProductDevelopment,
        Activity::Management,
    ];

    /// Machine key, as used in documents (`core_asset`, ...).
    pub fn key(self) -> &'static str {
        match self {
            Activity::CoreAsset => "core_asset",
            Activity::ProductDevelopment => "product_development",
            Activity::Management => "management",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Activity::CoreAsset => "Core Asset Development",
            Activity::ProductDevelopment => "Product Development",
            Activity::Management => "Management",
        }
    }

    /// Row title used in assessment reports.
    pub fn assessment_title(self) -> &'static str {
        match self {
            Activity::CoreAsset => "Core Asset Development Assessment",
            Activity::ProductDevelopment => "Product Development Process Assessment",
            Activity::Management => "Management Process Assessment",
        }
    }
}

impl fmt::Display for Activity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Question identifier `q1`..`q17`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuestionId(u8);

impl QuestionId {
    pub const COUNT: usize = 17;

    pub fn new(number: u8) -> Option<Self> {
        (1..=Self::COUNT as u8)
            .contains(&number)
            .then_some(Self(number))
    }

    /// All ids in questionnaire order.
    pub fn all() -> impl Iterator<Item = QuestionId> {
        (1..=Self::COUNT as u8).map(QuestionId)
    }

    pub fn number(self) -> u8 {
        self.0
    }

    /// Zero-based position in the questionnaire.
    pub fn index(self) -> usize {
        usize::from(self.0) - 1
    }
}

impl fmt::Display for QuestionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{}", self.0)
    }
}

impl FromStr for QuestionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.strip_prefix('q')
            .filter(|digits| !digits.starts_with('0'))
            .and_then(|digits| digits.parse::<u8>().ok())
            .and_then(QuestionId::new)
            .ok_or_else(|| format!("`{s}` is not a question id (q1..q17)"))
    }
}

impl Serialize for QuestionId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuestionId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Question {
    pub id: QuestionId,
    pub activity: Activity,
    pub text: String,
}

const QUESTIONS: [(Activity, &str); QuestionId::COUNT] = [
    (Activity::CoreAsset, "Are all of the core assets within the software product line repository and the resultant products consistent with the scope of software product line?"),
    (Activity::CoreAsset, "Do all the components present in the core asset repository define the variability mechanism to tailor them for effective utilization?"),
    (Activity::CoreAsset, "Do all the COTS present or added into core asset repository satisfy the cost benefit ratio for the organization?"),
    (Activity::CoreAsset, "Is the core asset repository updated constantly by adding new asset as the product line progresses?"),
    (Activity::CoreAsset, "Does a version control management system keep track of the core asset development and utilization history?"),
    (Activity::ProductDevelopment, "Do all the products within the software product line share a common architecture?"),
    (Activity::ProductDevelopment, "Does the variation among products remain within the scope of software product line?"),
    (Activity::ProductDevelopment, "Is every product released from the product line a valid business case for the organization?"),
    (Activity::ProductDevelopment, "Does the software product line produce a considerable number of products, or at least more than one?"),
    (Activity::ProductDevelopment, "Does every product released from the software product line meet the qualification criteria of the organization?"),
    (Activity::Management, "Is any configuration management system used to address the configuration management issues present in the software product line?"),
    (Activity::Management, "Is a comprehensive description and analysis of domain performed for the software product line?"),
    (Activity::Management, "Does the ROI (Return on Investment) of the software product line meet the organization's financial goal?"),
    (Activity::Management, "Are the requirements of the software product line clearly defined, analyzed, specified, verified and managed?"),
    (Activity::Management, "Does the requirement of the software product line define the fundamental products and their features within the product line?"),
    (Activity::Management, "Does the organizational structure support the software product line concepts and principles?"),
    (Activity::Management, "Are the essential activities of software product line development performed iteratively?"),
];

/// The 17-question assessment questionnaire.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuestionnaireSchema {
    questions: Vec<Question>,
}

impl QuestionnaireSchema {
    pub fn standard() -> Self {
        let questions = QuestionId::all()
            .zip(QUESTIONS)
            .map(|(id, (activity, text))| Question {
                id,
                activity,
                text: text.to_owned(),
            })
            .collect();
        Self { questions }
    }

    pub fn questions(&self) -> &[Question] {
        &self.questions
    }

    pub fn question(&self, id: QuestionId) -> &Question {
        &self.questions[id.index()]
    }

    /// Question ids belonging to `activity`, in questionnaire order.
    pub fn questions_for(&self, activity: Activity) -> Vec<QuestionId> {
        self.questions
            .iter()
            .filter(|q| q.activity == activity)
            .map(|q| q.id)
            .collect()
    }
}
