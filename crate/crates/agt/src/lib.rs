//! File formats, JSON reports and parallel batch runs on top of `agt-core`.

pub mod batch;
pub mod input;
pub mod report;

/// Serialize with two-space indentation and a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
