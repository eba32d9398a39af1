//! Built-in codes, compiled in from the `corpus/` directory.

use toric_codes_core::Code;

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name, ".code")))),*]
    };
}

/// `(name, file contents)` pairs.
pub type Entries = &'static [(&'static str, &'static str)];

pub const C1: &str = include_str!("../corpus/c1.code");
pub const CI: &str = include_str!("../corpus/ci.code");
pub const ZERO: &str = include_str!("../corpus/zero.code");

pub const INTERNAL: Entries = entries!["internal/L3", "internal/L4", "internal/L5", "internal/L6"];

pub const TREES: Entries = entries!["trees/path4", "trees/star4", "trees/caterpillar5"];

pub const EXTERNAL: Entries = entries![
    "external/full3",
    "external/chain3",
    "external/pair3",
    "external/triangle3",
    "external/cap3",
    "external/twopairs4",
    "external/fan4",
    "external/crown4",
    "external/full4",
    "external/path5",
    "external/mixed5",
    "external/full5",
];

pub const DEPTH1: Entries = entries![
    "depth1/ci",
    "depth1/lozenge",
    "depth1/domino",
    "depth1/lollipop",
    "depth1/flower",
    "depth1/chain4",
    "depth1/mixed5",
];

/// Parses a built-in code.
pub fn code(text: &str) -> Code {
    Code::parse_text(text).expect("built-in corpus file is well formed")
}

/// Parsed codes of a corpus section.
pub fn codes(entries: Entries) -> Vec<(&'static str, Code)> {
    entries.iter().map(|&(name, text)| (name, code(text))).collect()
}

/// Internal code `L_n` for `3 <= n <= 6`.
pub fn internal(n: usize) -> Option<Code> {
    INTERNAL.get(n.checked_sub(3)?).map(|&(_, text)| code(text))
}
