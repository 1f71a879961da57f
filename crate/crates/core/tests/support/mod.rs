//! Shared fixtures for the integration tests: case-study data, an
//! independent numerical oracle and the reduction-tree calibration.
#![allow(dead_code)]

pub mod calibration;
pub mod cases;
pub mod oracle;
