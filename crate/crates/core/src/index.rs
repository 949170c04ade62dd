//! Per-item tid bitsets over a whole database, with masked support and
//! closure queries by intersection.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::ops::RangeInclusive;

use crate::db::{Tid, TransactionDatabase};
use crate::error::{Error, Result};
use crate::itemset::{Item, Itemset};
use crate::tidset::TidSet;

/// A subset of the indexed transactions, used to restrict queries to one
/// partition or to the union of several.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TidMask(TidSet);

impl TidMask {
    pub(crate) fn from_bits(bits: TidSet) -> TidMask {
        TidMask(bits)
    }

    pub fn bits(&self) -> &TidSet {
        &self.0
    }

    pub fn count(&self) -> usize {
        self.0.count()
    }

    pub fn union(&self, other: &TidMask) -> TidMask {
        TidMask(self.0.union(&other.0))
    }

    pub fn is_disjoint(&self, other: &TidMask) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

/// Item → tidset table for one database.
///
/// Bit positions follow listing order, so position `p` is the transaction
/// with tid `tids[p]`.
#[derive(Debug, Clone)]
pub struct TidIndex {
    tids: Vec<Tid>,
    per_item: BTreeMap<Item, TidSet>,
    full: TidSet,
}

impl TidIndex {
    /// One pass over the database.
    pub fn build(db: &TransactionDatabase) -> TidIndex {
        let n = db.n_transactions();
        let mut per_item: BTreeMap<Item, TidSet> = BTreeMap::new();
        for (pos, t) in db.transactions().iter().enumerate() {
            for &item in t.items.items() {
                per_item
                    .entry(item)
                    .or_insert_with(|| TidSet::empty(n))
                    .insert(pos);
            }
        }
        TidIndex {
            tids: db.transactions().iter().map(|t| t.tid).collect(),
            per_item,
            full: TidSet::full(n),
        }
    }

    pub fn n_transactions(&self) -> usize {
        self.tids.len()
    }

    pub fn items(&self) -> impl Iterator<Item = Item> + '_ {
        self.per_item.keys().copied()
    }

    pub fn tidset(&self, item: Item) -> Option<&TidSet> {
        self.per_item.get(&item)
    }

    pub fn full_mask(&self) -> TidMask {
        TidMask(self.full.clone())
    }

    /// Mask of the transactions whose tid lies in `range`.
    pub fn range_mask(&self, range: &RangeInclusive<Tid>) -> TidMask {
        let start = self.tids.partition_point(|t| t < range.start());
        let end = self.tids.partition_point(|t| t <= range.end());
        let mut bits = TidSet::empty(self.tids.len());
        bits.insert_range(start, end);
        TidMask(bits)
    }

    /// Transactions of `mask` containing every item of `x`; `None` when some
    /// item is absent from the index.
    pub fn extent(&self, x: &Itemset, mask: &TidMask) -> Option<TidSet> {
        let mut acc = mask.0.clone();
        for item in x.items() {
            acc.intersect_with(self.per_item.get(item)?);
        }
        Some(acc)
    }

    /// Masked support. Items outside the universe give 0 and the empty set
    /// gives `|mask|`.
    pub fn support(&self, x: &Itemset, mask: &TidMask) -> usize {
        match x.items() {
            [] => mask.count(),
            [i] => self
                .per_item
                .get(i)
                .map_or(0, |t| t.intersection_count(&mask.0)),
            _ => self.extent(x, mask).map_or(0, |e| e.count()),
        }
    }

    /// Items shared by every masked transaction containing `x`.
    pub fn closure(&self, x: &Itemset, mask: &TidMask) -> Result<Itemset> {
        let extent = self.extent(x, mask).ok_or(Error::EmptyExtent)?;
        self.closure_of_extent(&extent)
    }

    /// Items whose tidset covers `extent`.
    pub fn closure_of_extent(&self, extent: &TidSet) -> Result<Itemset> {
        if extent.is_empty() {
            return Err(Error::EmptyExtent);
        }
        Ok(Itemset::from_sorted(
            self.per_item
                .iter()
                .filter(|(_, t)| extent.is_subset_of(t))
                .map(|(&i, _)| i)
                .collect(),
        ))
    }

    /// `ITEM<TAB>tid tid ...`, one line per item.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (item, tids) in &self.per_item {
            let _ = write!(out, "{item}\t");
            for (k, pos) in tids.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", self.tids[pos]);
            }
            out.push('\n');
        }
        out
    }
}
