//! Exhaustive reference miner for small universes, and result diffs.
//!
//! Supports of all `2^|universe|` itemsets are tabulated by counting each
//! distinct transaction once and summing counts over supersets. Nothing here
//! touches the tid index or the levelwise miner.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write};

use serde::Serialize;

use crate::db::TransactionDatabase;
use crate::error::{Error, Result};
use crate::itemset::{Item, Itemset};
use crate::pattern::{ClosedPattern, PatternSet};

pub const MAX_ORACLE_ITEMS: usize = 24;

/// Support of every subset of the universe, addressed by bitmask.
pub struct SupportTable {
    items: Vec<Item>,
    supports: Vec<u32>,
}

impl SupportTable {
    pub fn build(db: &TransactionDatabase) -> Result<SupportTable> {
        let items: Vec<Item> = db.universe().items().to_vec();
        let n = items.len();
        if n > MAX_ORACLE_ITEMS {
            return Err(Error::UniverseTooLarge {
                size: n,
                limit: MAX_ORACLE_ITEMS,
            });
        }
        let pos: BTreeMap<Item, usize> = items.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut supports = vec![0u32; 1 << n];
        for t in db.transactions() {
            let m = t.items.items().iter().fold(0usize, |m, i| m | 1 << pos[i]);
            supports[m] += 1;
        }
        for bit in 0..n {
            for m in 0..supports.len() {
                if m & (1 << bit) == 0 {
                    supports[m] += supports[m | 1 << bit];
                }
            }
        }
        Ok(SupportTable { items, supports })
    }

    pub fn n_items(&self) -> usize {
        self.items.len()
    }

    pub fn mask_of(&self, x: &Itemset) -> Option<usize> {
        x.items().iter().try_fold(0usize, |m, i| {
            self.items.binary_search(i).ok().map(|k| m | 1 << k)
        })
    }

    pub fn itemset_of(&self, mask: usize) -> Itemset {
        Itemset::from_sorted(
            (0..self.items.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| self.items[k])
                .collect(),
        )
    }

    pub fn support_of_mask(&self, mask: usize) -> usize {
        self.supports[mask] as usize
    }

    /// Support of any itemset; items outside the universe give 0.
    pub fn support(&self, x: &Itemset) -> usize {
        self.mask_of(x).map_or(0, |m| self.support_of_mask(m))
    }

    fn full(&self) -> usize {
        (1 << self.items.len()) - 1
    }

    /// No single-item extension keeps the support.
    pub fn is_closed(&self, mask: usize) -> bool {
        let s = self.supports[mask];
        (0..self.items.len())
            .filter(|b| mask & (1 << b) == 0)
            .all(|b| self.supports[mask | 1 << b] < s)
    }

    /// Inclusion-minimal subsets of `closed` with the same support.
    pub fn minimal_generators(&self, closed: usize) -> Vec<usize> {
        let s = self.supports[closed];
        let mut gens = Vec::new();
        let mut sub = closed;
        loop {
            if self.supports[sub] == s {
                let minimal = (0..self.items.len())
                    .filter(|b| sub & (1 << b) != 0)
                    .all(|b| self.supports[sub & !(1 << b)] > s);
                if minimal {
                    gens.push(sub);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & closed;
        }
        gens
    }

    /// Iterates all frequent itemset masks.
    pub fn frequent(&self, minsup_abs: usize) -> impl Iterator<Item = usize> + '_ {
        (0..=self.full()).filter(move |&m| self.supports[m] as usize >= minsup_abs && self.supports[m] > 0)
    }
}

/// Every frequent closed itemset with its minimal generators, by
/// enumeration.
pub fn oracle_closed(db: &TransactionDatabase, minsup_abs: usize) -> Result<PatternSet> {
    let table = SupportTable::build(db)?;
    let minsup_abs = minsup_abs.max(1);
    let patterns = table
        .frequent(minsup_abs)
        .filter(|&m| table.is_closed(m))
        .map(|m| {
            ClosedPattern::new(
                table.itemset_of(m),
                table.support_of_mask(m),
                table
                    .minimal_generators(m)
                    .into_iter()
                    .map(|g| table.itemset_of(g))
                    .collect(),
            )
        })
        .collect();
    Ok(PatternSet::new(patterns, db.n_transactions(), minsup_abs))
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct DiffReport {
    pub missing_closed: Vec<(Itemset, usize)>,
    pub spurious: Vec<(Itemset, usize)>,
    pub support_mismatches: Vec<(Itemset, usize, usize)>,
    pub generator_mismatches: Vec<(Itemset, Vec<Itemset>, Vec<Itemset>)>,
    pub recall: f64,
    pub precision: f64,
}

impl DiffReport {
    pub fn is_identical(&self) -> bool {
        self.missing_closed.is_empty()
            && self.spurious.is_empty()
            && self.support_mismatches.is_empty()
            && self.generator_mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let _ = writeln!(s, "recall={:.6} precision={:.6}", self.recall, self.precision);
        for (x, supp) in &self.missing_closed {
            let _ = writeln!(s, "missing   {x} ; supp={supp}");
        }
        for (x, supp) in &self.spurious {
            let _ = writeln!(s, "spurious  {x} ; supp={supp}");
        }
        for (x, got, want) in &self.support_mismatches {
            let _ = writeln!(s, "support   {x} ; got={got} expected={want}");
        }
        for (x, got, want) in &self.generator_mismatches {
            let _ = writeln!(s, "gens      {x} ; got={got:?} expected={want:?}");
        }
        if self.is_identical() {
            s.push_str("identical\n");
        }
        f.write_str(&s)
    }
}

/// Compares two pattern sets by closed itemset.
pub fn compare(got: &PatternSet, expected: &PatternSet) -> DiffReport {
    fn by_closed(ps: &PatternSet) -> BTreeMap<Itemset, &ClosedPattern> {
        ps.patterns.iter().map(|p| (p.closed.clone(), p)).collect()
    }
    let (g, e) = (by_closed(got), by_closed(expected));
    let mut report = DiffReport::default();
    for (x, p) in &e {
        match g.get(x) {
            None => report.missing_closed.push((x.clone(), p.support)),
            Some(q) => {
                if q.support != p.support {
                    report.support_mismatches.push((x.clone(), q.support, p.support));
                }
                let (a, b): (BTreeSet<_>, BTreeSet<_>) =
                    (q.generators.iter().collect(), p.generators.iter().collect());
                if a != b {
                    report.generator_mismatches.push((
                        x.clone(),
                        q.generators.clone(),
                        p.generators.clone(),
                    ));
                }
            }
        }
    }
    for (x, q) in &g {
        if !e.contains_key(x) {
            report.spurious.push((x.clone(), q.support));
        }
    }
    let common = e.len() - report.missing_closed.len();
    report.recall = if e.is_empty() { 1.0 } else { common as f64 / e.len() as f64 };
    report.precision = if g.is_empty() { 1.0 } else { common as f64 / g.len() as f64 };
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{close_context, worked_example};

    fn set<const N: usize>(items: [u32; N]) -> Itemset {
        Itemset::from(items)
    }

    #[test]
    fn worked_example_classes() {
        let ps = oracle_closed(&worked_example(), 8).unwrap();
        let expected = vec![
            ClosedPattern::new(set([1, 3, 5, 7, 9, 13, 17]), 12, vec![Itemset::empty()]),
            ClosedPattern::new(set([1, 3, 5, 7, 9, 13, 15, 17]), 10, vec![set([15])]),
            ClosedPattern::new(set([1, 3, 5, 7, 9, 11, 13, 17]), 9, vec![set([11])]),
            ClosedPattern::new(set([1, 3, 5, 7, 9, 13, 17, 19]), 9, vec![set([19])]),
            ClosedPattern::new(set([1, 3, 5, 7, 9, 11, 13, 15, 17]), 8, vec![set([11, 15])]),
        ];
        assert_eq!(ps.patterns, expected);
    }

    #[test]
    fn single_item_database() {
        let db = TransactionDatabase::from_rows([[4]]);
        let ps = oracle_closed(&db, 1).unwrap();
        assert_eq!(ps.patterns, vec![ClosedPattern::new(set([4]), 1, vec![Itemset::empty()])]);
    }

    #[test]
    fn close_context_closed_sets() {
        // C, AC, BE, BCE, ABCE plus the empty closure of the whole context
        let ps = oracle_closed(&close_context(), 2).unwrap();
        let closed: BTreeSet<Itemset> = ps.patterns.iter().map(|p| p.closed.clone()).collect();
        let expected: BTreeSet<Itemset> = [
            Itemset::empty(),
            set([3]),
            set([1, 3]),
            set([2, 5]),
            set([2, 3, 5]),
            set([1, 2, 3, 5]),
        ]
        .into_iter()
        .collect();
        assert_eq!(closed, expected);
        assert_eq!(ps.get(&set([2, 5])).unwrap().generators, vec![set([2]), set([5])]);
    }

    #[test]
    fn refuses_large_universe() {
        let db = TransactionDatabase::from_rows([(0..25).collect::<Vec<u32>>()]);
        assert_eq!(
            oracle_closed(&db, 1).unwrap_err(),
            Error::UniverseTooLarge { size: 25, limit: 24 }
        );
    }

    #[test]
    fn support_table_matches_scan() {
        let db = worked_example();
        let t = SupportTable::build(&db).unwrap();
        for x in [set([11, 19]), set([15]), Itemset::empty(), set([16, 20]), set([2])] {
            assert_eq!(t.support(&x), db.scan_support(&x), "{x:?}");
        }
    }

    #[test]
    fn compare_reports() {
        let expected = oracle_closed(&worked_example(), 8).unwrap();
        let same = compare(&expected, &expected);
        assert!(same.is_identical());
        assert_eq!((same.recall, same.precision), (1.0, 1.0));

        let mut got = expected.clone();
        got.patterns.pop();
        got.patterns[1].support = 11;
        got.patterns[2].generators = vec![set([1, 11])];
        let diff = compare(&got, &expected);
        assert_eq!(diff.recall, 4.0 / 5.0);
        assert_eq!(diff.precision, 1.0);
        assert_eq!(diff.missing_closed.len(), 1);
        assert_eq!(diff.support_mismatches.len(), 1);
        assert_eq!(diff.generator_mismatches.len(), 1);
        assert!(diff.to_string().contains("missing"));
        assert!(diff.to_json().contains("\"recall\""));
    }

    #[test]
    fn empty_expectation_has_full_recall() {
        let empty = PatternSet::new(Vec::new(), 0, 1);
        let r = compare(&empty, &empty);
        assert_eq!((r.recall, r.precision), (1.0, 1.0));
    }
}
