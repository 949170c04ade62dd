//! Closed patterns, pattern sets, and their text/JSON file formats.
//!
//! Text format, one pattern per line:
//!
//! ```text
//! 1 3 5 7 9 13 15 17 ; supp=10 ; gens=15
//! 1 3 5 7 9 13 17 ; supp=12 ; gens={}
//! ```
//!
//! Generators are separated by `|`; `{}` is the empty itemset. Lines starting
//! with `#` are comments.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::itemset::Itemset;

/// One equivalence class: a closed itemset, its support, and its minimal
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosedPattern {
    pub closed: Itemset,
    pub support: usize,
    pub generators: Vec<Itemset>,
}

impl ClosedPattern {
    pub fn new(closed: Itemset, support: usize, mut generators: Vec<Itemset>) -> Self {
        generators.sort();
        generators.dedup();
        ClosedPattern {
            closed,
            support,
            generators,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    pub patterns: Vec<ClosedPattern>,
    pub context_size: usize,
    pub minsup_abs: usize,
}

/// Descending support, then ascending itemset.
pub fn canonical_order(a: (&Itemset, usize), b: (&Itemset, usize)) -> std::cmp::Ordering {
    b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0))
}

impl PatternSet {
    /// Sorts patterns canonically.
    pub fn new(mut patterns: Vec<ClosedPattern>, context_size: usize, minsup_abs: usize) -> Self {
        patterns.sort_by(|a, b| canonical_order((&a.closed, a.support), (&b.closed, b.support)));
        PatternSet {
            patterns,
            context_size,
            minsup_abs,
        }
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn get(&self, closed: &Itemset) -> Option<&ClosedPattern> {
        self.patterns.iter().find(|p| &p.closed == closed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.patterns {
            let _ = write!(out, "{} ; supp={} ; gens=", p.closed, p.support);
            for (k, g) in p.generators.iter().enumerate() {
                if k > 0 {
                    out.push('|');
                }
                let _ = write!(out, "{g}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.patterns).expect("patterns serialize")
    }

    /// Parses the text format. Threshold and context size are not part of
    /// the body, so the caller supplies them.
    pub fn from_text(text: &str, context_size: usize, minsup_abs: usize) -> Result<PatternSet> {
        let mut patterns = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| Error::Parse {
                line: lineno + 1,
                message: message.to_string(),
            };
            let fields: Vec<&str> = line.split(';').map(str::trim).collect();
            let [closed, supp, gens] = fields[..] else {
                return Err(err("expected three ';'-separated fields"));
            };
            let support = supp
                .strip_prefix("supp=")
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| err("bad supp field"))?;
            let gens = gens
                .strip_prefix("gens=")
                .ok_or_else(|| err("bad gens field"))?;
            let closed = parse_itemset(closed).ok_or_else(|| err("bad itemset"))?;
            let generators = gens
                .split('|')
                .map(|g| parse_itemset(g.trim()).ok_or_else(|| err("bad generator")))
                .collect::<Result<Vec<_>>>()?;
            patterns.push(ClosedPattern::new(closed, support, generators));
        }
        Ok(PatternSet::new(patterns, context_size, minsup_abs))
    }

    pub fn from_json(text: &str, context_size: usize, minsup_abs: usize) -> Result<PatternSet> {
        let patterns: Vec<ClosedPattern> = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Ok(PatternSet::new(patterns, context_size, minsup_abs))
    }
}

fn parse_itemset(s: &str) -> Option<Itemset> {
    if s == "{}" {
        return Some(Itemset::empty());
    }
    s.split_whitespace()
        .map(|t| t.parse().ok())
        .collect::<Option<Vec<_>>>()
        .map(Itemset::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PatternSet {
        PatternSet::new(
            vec![
                ClosedPattern::new(Itemset::from([1, 2]), 3, vec![Itemset::from([2])]),
                ClosedPattern::new(Itemset::from([1]), 5, vec![Itemset::empty()]),
                ClosedPattern::new(
                    Itemset::from([1, 3, 4]),
                    3,
                    vec![Itemset::from([4]), Itemset::from([3])],
                ),
            ],
            6,
            2,
        )
    }

    #[test]
    fn text_layout() {
        assert_eq!(
            sample().to_text(),
            "1 ; supp=5 ; gens={}\n1 2 ; supp=3 ; gens=2\n1 3 4 ; supp=3 ; gens=3|4\n"
        );
    }

    #[test]
    fn text_and_json_read_back() {
        let s = sample();
        assert_eq!(PatternSet::from_text(&s.to_text(), 6, 2).unwrap(), s);
        assert_eq!(PatternSet::from_json(&s.to_json(), 6, 2).unwrap(), s);
        let json: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(json[0]["closed"], serde_json::json!([1]));
        assert_eq!(json[0]["generators"], serde_json::json!([[]]));
    }

    #[test]
    fn malformed_lines() {
        assert!(PatternSet::from_text("1 2 ; supp=x ; gens={}", 1, 1).is_err());
        assert!(PatternSet::from_text("1 2 ; supp=3", 1, 1).is_err());
        assert!(PatternSet::from_text("# header\n\n", 1, 1).unwrap().is_empty());
    }
}
