pub mod json;
pub mod suites;
