//! Transaction databases, FIMI parsing, minimum-support thresholds and the
//! contiguous partitioner.

use std::collections::BTreeSet;
use std::io::BufRead;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::itemset::{Item, Itemset};

/// 1-based transaction identifier.
pub type Tid = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction {
    pub tid: Tid,
    pub items: Itemset,
}

/// The extraction context: transactions, the item universe, and (implicitly)
/// the incidence relation between them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransactionDatabase {
    transactions: Vec<Transaction>,
    universe: Itemset,
}

impl TransactionDatabase {
    /// Builds a database, checking that tids are strictly increasing.
    pub fn new(transactions: Vec<Transaction>) -> Result<Self> {
        if let Some(w) = transactions.windows(2).find(|w| w[0].tid >= w[1].tid) {
            return Err(Error::InvalidArgument(format!(
                "tids must be strictly increasing ({} then {})",
                w[0].tid, w[1].tid
            )));
        }
        let universe: BTreeSet<Item> = transactions
            .iter()
            .flat_map(|t| t.items.items().iter().copied())
            .collect();
        Ok(TransactionDatabase {
            transactions,
            universe: Itemset::from_sorted(universe.into_iter().collect()),
        })
    }

    /// Numbers the rows 1, 2, ... in order.
    pub fn from_rows<I, R>(rows: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = Item>,
    {
        let transactions = rows
            .into_iter()
            .enumerate()
            .map(|(k, r)| Transaction {
                tid: k as Tid + 1,
                items: Itemset::new(r),
            })
            .collect();
        TransactionDatabase::new(transactions).expect("sequential tids")
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    pub fn universe(&self) -> &Itemset {
        &self.universe
    }

    pub fn n_transactions(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// Support by direct scan.
    pub fn scan_support(&self, x: &Itemset) -> usize {
        self.transactions
            .iter()
            .filter(|t| x.is_subset_of(&t.items))
            .count()
    }

    /// Restriction to the transactions whose tid falls in `range`.
    pub fn restrict(&self, range: &RangeInclusive<Tid>) -> TransactionDatabase {
        let rows = self
            .transactions
            .iter()
            .filter(|t| range.contains(&t.tid))
            .cloned()
            .collect();
        TransactionDatabase::new(rows).expect("subsequence keeps tid order")
    }

    /// FIMI text, one line per transaction.
    pub fn to_fimi(&self) -> String {
        let mut out = String::new();
        for t in &self.transactions {
            out.push_str(&t.items.to_string());
            out.push('\n');
        }
        out
    }
}

/// Parses FIMI `.dat` text.
///
/// Blank lines are skipped; the k-th non-blank line becomes tid k. Items are
/// separated by spaces or tabs and duplicates within a line collapse.
pub fn parse_fimi<R: BufRead>(reader: R) -> Result<TransactionDatabase> {
    let mut transactions = Vec::new();
    for (lineno, line) in reader.split(b'\n').enumerate() {
        let line = line.map_err(|e| Error::Parse {
            line: lineno + 1,
            message: e.to_string(),
        })?;
        let text = std::str::from_utf8(&line).map_err(|_| Error::Parse {
            line: lineno + 1,
            message: "not valid UTF-8".into(),
        })?;
        let text = text.trim_end_matches('\r');
        if text.trim().is_empty() {
            continue;
        }
        let mut items = Vec::new();
        for tok in text.split([' ', '\t']).filter(|t| !t.is_empty()) {
            let item: Item = tok.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("invalid item token {tok:?}"),
            })?;
            items.push(item);
        }
        transactions.push(Transaction {
            tid: transactions.len() as Tid + 1,
            items: Itemset::new(items),
        });
    }
    TransactionDatabase::new(transactions)
}

pub fn parse_fimi_str(text: &str) -> Result<TransactionDatabase> {
    parse_fimi(text.as_bytes())
}

/// Relative minimum support in (0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinsupSpec {
    relative: f64,
}

impl MinsupSpec {
    pub fn new(relative: f64) -> Result<Self> {
        if !(relative > 0.0 && relative <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "minsup must lie in (0, 1], got {relative}"
            )));
        }
        Ok(MinsupSpec { relative })
    }

    pub fn relative(&self) -> f64 {
        self.relative
    }

    /// ceil(relative * n), never below 1.
    pub fn absolute(&self, n: usize) -> usize {
        let x = self.relative * n as f64;
        // 0.7 * 10 evaluates to 7.000000000000001
        let r = x.round();
        let abs = if (x - r).abs() < 1e-9 { r } else { x.ceil() };
        (abs as usize).max(1)
    }
}

pub fn absolute_minsup(relative: f64, n: usize) -> Result<usize> {
    Ok(MinsupSpec::new(relative)?.absolute(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub index: usize,
    pub tid_range: RangeInclusive<Tid>,
    pub database: TransactionDatabase,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.database.n_transactions()
    }

    pub fn is_empty(&self) -> bool {
        self.database.is_empty()
    }
}

/// Splits `db` into `n` contiguous blocks in tid order. The first
/// `n_transactions % n` blocks get one extra transaction.
pub fn partition_db(db: &TransactionDatabase, n: usize) -> Result<Vec<Partition>> {
    let total = db.n_transactions();
    if n == 0 || n > total {
        return Err(Error::InvalidArgument(format!(
            "partition count must lie in 1..={total}, got {n}"
        )));
    }
    let (base, extra) = (total / n, total % n);
    let mut parts = Vec::with_capacity(n);
    let mut start = 0;
    for index in 0..n {
        let size = base + usize::from(index < extra);
        let rows = &db.transactions()[start..start + size];
        let tid_range = rows[0].tid..=rows[size - 1].tid;
        parts.push(Partition {
            index,
            tid_range,
            database: TransactionDatabase::new(rows.to_vec()).expect("subsequence"),
        });
        start += size;
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_simple_file() {
        let db = parse_fimi_str("1 3 5\n3 5 7\n").unwrap();
        assert_eq!(db.n_transactions(), 2);
        assert_eq!(db.transactions()[1].tid, 2);
        assert_eq!(db.universe(), &Itemset::from([1, 3, 5, 7]));
    }

    #[test]
    fn collapses_duplicates_and_handles_crlf_tabs_blanks() {
        let db = parse_fimi_str("7   7 7\n").unwrap();
        assert_eq!(db.transactions()[0].items, Itemset::from([7]));

        let db = parse_fimi_str("\n2\t1\r\n\n  \n3 1\r\n").unwrap();
        assert_eq!(db.n_transactions(), 2);
        assert_eq!(db.transactions()[0].items, Itemset::from([1, 2]));
        assert_eq!(db.transactions()[1].tid, 2);
    }

    #[test]
    fn empty_input_is_legal() {
        let db = parse_fimi_str("").unwrap();
        assert_eq!(db.n_transactions(), 0);
        assert!(db.universe().is_empty());
    }

    #[test]
    fn bad_token_reports_line() {
        let err = parse_fimi_str("1 2\n\n3 x 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        assert!(parse_fimi_str("-1\n").is_err());
    }

    #[test]
    fn absolute_threshold_uses_ceiling() {
        assert_eq!(absolute_minsup(0.6, 12).unwrap(), 8);
        assert_eq!(absolute_minsup(0.6, 6).unwrap(), 4);
        assert_eq!(absolute_minsup(1.0, 37).unwrap(), 37);
        assert_eq!(absolute_minsup(0.7, 10).unwrap(), 7);
        assert_eq!(absolute_minsup(0.01, 5).unwrap(), 1);
        assert!(absolute_minsup(0.0, 5).is_err());
        assert!(absolute_minsup(1.5, 5).is_err());
        assert!(absolute_minsup(f64::NAN, 5).is_err());
    }

    #[test]
    fn partition_rejects_bad_counts() {
        let db = TransactionDatabase::from_rows([[1], [2], [3]]);
        assert!(partition_db(&db, 0).is_err());
        assert!(partition_db(&db, 4).is_err());
        let one = partition_db(&db, 1).unwrap();
        assert_eq!(one[0].database, db);
    }

    #[test]
    fn mushroom_sized_split_is_balanced() {
        let db = TransactionDatabase::from_rows((0..8124).map(|k| [k % 7]));
        let parts = partition_db(&db, 2).unwrap();
        assert!(parts[0].len().abs_diff(parts[1].len()) <= 1);
        assert_eq!(parts[0].len() + parts[1].len(), 8124);
    }

    fn small_db() -> impl Strategy<Value = TransactionDatabase> {
        proptest::collection::vec(proptest::collection::btree_set(0u32..8, 1..5), 1..25)
            .prop_map(TransactionDatabase::from_rows)
    }

    proptest! {
        #[test]
        fn fimi_round_trip_is_idempotent(db in small_db()) {
            let text = db.to_fimi();
            let again = parse_fimi_str(&text).unwrap();
            prop_assert_eq!(&again, &db);
            prop_assert_eq!(again.to_fimi(), text);
        }

        #[test]
        fn partitions_cover_and_are_disjoint(db in small_db(), n in 1usize..6) {
            prop_assume!(n <= db.n_transactions());
            let parts = partition_db(&db, n).unwrap();
            let sizes: Vec<usize> = parts.iter().map(Partition::len).collect();
            let (lo, hi) = (sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
            prop_assert!(hi - lo <= 1);
            let joined: Vec<Transaction> = parts
                .iter()
                .flat_map(|p| p.database.transactions().iter().cloned())
                .collect();
            prop_assert_eq!(joined, db.transactions().to_vec());
            for w in parts.windows(2) {
                prop_assert!(w[0].tid_range.end() < w[1].tid_range.start());
            }
        }

        #[test]
        fn support_is_additive_over_partitions(db in small_db(), n in 1usize..6,
                                               x in proptest::collection::btree_set(0u32..8, 0..4)) {
            prop_assume!(n <= db.n_transactions());
            let x = Itemset::new(x);
            let parts = partition_db(&db, n).unwrap();
            let sum: usize = parts.iter().map(|p| p.database.scan_support(&x)).sum();
            prop_assert_eq!(sum, db.scan_support(&x));
        }
    }
}
