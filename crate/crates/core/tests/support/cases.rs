//! The four published case studies.

pub struct Case {
    pub organization: &'static str,
    pub declared: u8,
    pub answers: [f64; 17],
    /// Core asset, product development, management, overall.
    pub crisp: [f64; 4],
    pub terms: [&'static [&'static str]; 4],
    pub levels: [&'static [u8]; 4],
    pub average: f64,
}

pub const GROUP_NAMES: [&str; 4] = ["core_asset", "product_development", "management", "overall"];

pub const CASES: [Case; 4] = [
    Case {
        organization: "A",
        declared: 2,
        answers: [
            35.0, 40.0, 25.0, 35.0, 25.0, 40.0, 10.0, 5.0, 50.0, 45.0, 30.0, 10.0, 15.0, 20.0,
            30.0, 35.0, 7.0,
        ],
        crisp: [34.84, 29.27, 8.64, 17.5],
        terms: [
            &["Defined", "Managed"],
            &["Defined"],
            &["Initial"],
            &["Repeatable"],
        ],
        levels: [&[3, 4], &[3], &[1], &[2]],
        average: 26.88,
    },
    Case {
        organization: "B",
        declared: 5,
        answers: [
            40.0, 40.0, 15.0, 30.0, 50.0, 15.0, 15.0, 30.0, 50.0, 40.0, 50.0, 40.0, 40.0, 30.0,
            40.0, 45.0, 25.0,
        ],
        crisp: [37.5, 37.5, 44.67, 46.11],
        terms: [
            &["Managed"],
            &["Managed"],
            &["Managed", "Optimizing"],
            &["Optimizing"],
        ],
        levels: [&[4], &[4], &[4, 5], &[5]],
        average: 35.00,
    },
    Case {
        organization: "C",
        declared: 3,
        answers: [
            32.5, 27.5, 30.0, 37.5, 40.0, 37.5, 32.5, 30.0, 35.0, 37.5, 32.5, 35.0, 30.0, 35.0,
            32.5, 30.0, 37.5,
        ],
        crisp: [37.5, 34.84, 17.5, 27.07],
        terms: [
            &["Managed"],
            &["Defined", "Managed"],
            &["Repeatable"],
            &["Defined"],
        ],
        levels: [&[4], &[3, 4], &[2], &[3]],
        average: 33.67,
    },
    Case {
        organization: "D",
        declared: 2,
        answers: [
            40.0, 30.0, 35.0, 30.0, 20.0, 40.0, 35.0, 35.0, 30.0, 30.0, 25.0, 20.0, 30.0, 35.0,
            35.0, 35.0, 35.0,
        ],
        crisp: [25.65, 34.84, 17.5, 17.5],
        terms: [
            &["Defined"],
            &["Defined", "Managed"],
            &["Repeatable"],
            &["Repeatable"],
        ],
        levels: [&[3], &[3, 4], &[2], &[2]],
        // recomputed mean; the published table prints 32.23
        average: 31.76,
    },
];

/// Answer positions of each activity.
pub const GROUPS: [std::ops::Range<usize>; 3] = [0..5, 5..10, 10..17];

pub fn case(org: &str) -> &'static Case {
    CASES
        .iter()
        .find(|c| c.organization == org)
        .expect("known case")
}
