//! Levelwise miner for frequent closed itemsets and their minimal
//! generators.
//!
//! Level 0 holds the empty generator. Each level alternates two steps:
//! [`gen_closure`] drops infrequent and non-minimal candidates and computes
//! closures of the survivors; [`gen_generator`] joins the survivors into the
//! next level's candidates. A candidate is a minimal generator iff its
//! support is strictly below the smallest support among its immediate
//! subsets (`est_support`).

use std::collections::{BTreeMap, HashMap};

use crate::db::TransactionDatabase;
use crate::index::{TidIndex, TidMask};
use crate::itemset::Itemset;
use crate::pattern::{ClosedPattern, PatternSet};
use crate::tidset::TidSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCandidate {
    pub itemset: Itemset,
    pub support: usize,
    /// Minimum support over the immediate subsets.
    pub est_support: usize,
    /// Set by [`gen_closure`].
    pub closure: Option<Itemset>,
    extent: Option<TidSet>,
}

impl GeneratorCandidate {
    pub fn new(itemset: Itemset, est_support: usize) -> Self {
        GeneratorCandidate {
            itemset,
            support: 0,
            est_support,
            closure: None,
            extent: None,
        }
    }

    /// Computes support (and caches the extent) from the index.
    pub fn count(&mut self, index: &TidIndex, mask: &TidMask) {
        let extent = index
            .extent(&self.itemset, mask)
            .unwrap_or_else(|| TidSet::empty(mask.bits().width()));
        self.support = extent.count();
        self.extent = Some(extent);
    }
}

/// Keeps frequent minimal generators and fills in their closures.
///
/// Level-0 (the empty set) is kept whenever it is frequent.
pub fn gen_closure(
    level: Vec<GeneratorCandidate>,
    index: &TidIndex,
    mask: &TidMask,
    minsup_abs: usize,
) -> Vec<GeneratorCandidate> {
    level
        .into_iter()
        .filter(|c| c.support >= minsup_abs.max(1))
        .filter(|c| c.itemset.is_empty() || c.support < c.est_support)
        .map(|mut c| {
            if c.extent.is_none() {
                c.count(index, mask);
            }
            let extent = c.extent.as_ref().expect("counted");
            c.closure = Some(
                index
                    .closure_of_extent(extent)
                    .expect("frequent candidates have non-empty extents"),
            );
            c
        })
        .collect()
}

/// Builds level k+1 candidates from the retained k-generators.
///
/// Pairs sharing a (k-1)-prefix are joined. A candidate survives only if
/// every k-subset is a retained generator and it is not contained in the
/// closure of any of them. Supports are left uncounted.
pub fn gen_generator(frequent_k: &[GeneratorCandidate]) -> Vec<GeneratorCandidate> {
    let retained: HashMap<&Itemset, &GeneratorCandidate> =
        frequent_k.iter().map(|c| (&c.itemset, c)).collect();
    let mut sorted: Vec<&GeneratorCandidate> = frequent_k.iter().collect();
    sorted.sort_by(|a, b| a.itemset.cmp(&b.itemset));

    let mut out = Vec::new();
    for (i, a) in sorted.iter().enumerate() {
        let a_items = a.itemset.items();
        let Some((&a_last, prefix)) = a_items.split_last() else {
            continue;
        };
        for b in &sorted[i + 1..] {
            let b_items = b.itemset.items();
            if &b_items[..b_items.len() - 1] != prefix {
                break;
            }
            let b_last = *b_items.last().expect("same length as a");
            debug_assert!(a_last < b_last);
            let cand = a.itemset.extended(b_last);
            if let Some(c) = admit(cand, &retained) {
                out.push(c);
            }
        }
    }
    out
}

fn admit(
    cand: Itemset,
    retained: &HashMap<&Itemset, &GeneratorCandidate>,
) -> Option<GeneratorCandidate> {
    let mut est = usize::MAX;
    for pos in 0..cand.len() {
        let sub = retained.get(&cand.without_index(pos))?;
        if let Some(cl) = &sub.closure {
            if cand.is_subset_of(cl) {
                return None;
            }
        }
        est = est.min(sub.support);
    }
    Some(GeneratorCandidate::new(cand, est))
}

/// Mines every frequent closed itemset of `db` with its minimal generators.
pub fn mine_closed(db: &TransactionDatabase, minsup_abs: usize) -> PatternSet {
    let index = TidIndex::build(db);
    mine_closed_masked(&index, &index.full_mask(), minsup_abs)
}

/// Same as [`mine_closed`], restricted to the transactions in `mask`.
pub fn mine_closed_masked(index: &TidIndex, mask: &TidMask, minsup_abs: usize) -> PatternSet {
    let minsup_abs = minsup_abs.max(1);
    let context_size = mask.count();

    let mut root = GeneratorCandidate::new(Itemset::empty(), context_size);
    root.count(index, mask);
    let mut level = gen_closure(vec![root], index, mask, minsup_abs);
    let Some(root) = level.first().cloned() else {
        return PatternSet::new(Vec::new(), context_size, minsup_abs);
    };
    let root_closure = root.closure.clone().expect("closed");

    let mut classes: BTreeMap<Itemset, (usize, Vec<Itemset>)> = BTreeMap::new();
    let mut record = |gens: &[GeneratorCandidate]| {
        for g in gens {
            let entry = classes
                .entry(g.closure.clone().expect("closed"))
                .or_insert((g.support, Vec::new()));
            debug_assert_eq!(entry.0, g.support);
            entry.1.push(g.itemset.clone());
        }
    };
    record(&level);

    // level 1 is seeded from the item universe with est_support = supp(∅)
    let mut candidates: Vec<GeneratorCandidate> = index
        .items()
        .filter(|&i| !root_closure.contains(i))
        .map(|i| GeneratorCandidate::new(Itemset::from_sorted(vec![i]), root.support))
        .collect();
    while !candidates.is_empty() {
        let extents: HashMap<&[u32], &TidSet> = level
            .iter()
            .filter_map(|g| Some((g.itemset.items(), g.extent.as_ref()?)))
            .collect();
        for c in &mut candidates {
            count_incremental(c, &extents, index, mask);
        }
        level = gen_closure(candidates, index, mask, minsup_abs);
        record(&level);
        candidates = gen_generator(&level);
    }

    let patterns = classes
        .into_iter()
        .map(|(closed, (support, gens))| ClosedPattern::new(closed, support, gens))
        .collect();
    PatternSet::new(patterns, context_size, minsup_abs)
}

/// Counts a candidate by intersecting its prefix's cached extent with the
/// tidset of its last item, falling back to a full intersection.
fn count_incremental(
    c: &mut GeneratorCandidate,
    previous: &HashMap<&[u32], &TidSet>,
    index: &TidIndex,
    mask: &TidMask,
) {
    let items = c.itemset.items();
    let (last, prefix) = items.split_last().expect("non-empty candidate");
    match (previous.get(prefix), index.tidset(*last)) {
        (Some(e), Some(t)) => {
            let extent = e.intersection(t);
            c.support = extent.count();
            c.extent = Some(extent);
        }
        _ => c.count(index, mask),
    }
}
