//! Pattern library files: `key: value` header lines (`type`, `name`,
//! `binomial`, optional `shared-binomial`) followed by the words of the
//! pattern's local code.

use toric_codes_core::graph::PatternGraph;

use crate::error::{AppError, AppResult};

pub const LIBRARY: [&str; 6] = [
    include_str!("../patterns/type1.pattern"),
    include_str!("../patterns/type2.pattern"),
    include_str!("../patterns/type3.pattern"),
    include_str!("../patterns/type4.pattern"),
    include_str!("../patterns/type5.pattern"),
    include_str!("../patterns/type6.pattern"),
];

pub fn parse_pattern(text: &str) -> AppResult<PatternGraph> {
    let (mut id, mut name, mut binomial, mut shared) = (None, None, None, false);
    let mut words = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        match line.split_once(':') {
            Some((key, value)) => {
                let value = value.trim();
                match key.trim() {
                    "type" => id = Some(value.parse::<u8>().map_err(|_| AppError::Parse(format!("bad type {value:?}")))?),
                    "name" => name = Some(value.to_string()),
                    "binomial" => binomial = Some(value.to_string()),
                    "shared-binomial" => shared = value == "true",
                    other => return Err(AppError::Parse(format!("unknown pattern key {other:?}"))),
                }
            }
            None => words.push(line),
        }
    }
    let missing = |k: &str| AppError::Parse(format!("pattern file lacks `{k}`"));
    let id = id.ok_or_else(|| missing("type"))?;
    let name = name.ok_or_else(|| missing("name"))?;
    let binomial = binomial.ok_or_else(|| missing("binomial"))?;
    PatternGraph::new(id, &name, &words, &binomial, shared).map_err(|e| AppError::Parse(format!("pattern type {id}: {e}")))
}

/// The shipped library, in type order.
pub fn library() -> Vec<PatternGraph> {
    LIBRARY.iter().map(|t| parse_pattern(t).expect("shipped pattern file is well formed")).collect()
}
