//! Divide-and-conquer mining: partition results are merged pairwise with
//! exact support counting, then the merged list is pruned back to closed
//! itemsets and minimal generators are reassigned.
//!
//! A merge looks each local closed itemset and local generator up in the
//! other side's lists. When both local supports are known they are summed,
//! which is exact because partitions are tid-disjoint. Otherwise the support
//! is recounted on the shared [`TidIndex`] under the merge mask and the
//! itemset is kept only if it reaches the merge threshold.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::db::{partition_db, MinsupSpec, TransactionDatabase};
use crate::error::{Error, Result};
use crate::index::{TidIndex, TidMask};
use crate::itemset::Itemset;
use crate::miner::{mine_closed, mine_closed_masked};
use crate::pattern::{canonical_order, ClosedPattern, PatternSet};
use crate::tidset::TidSet;

/// Where a merged itemset was seen.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Origin {
    pub closed_in_a: bool,
    pub closed_in_b: bool,
    pub gen_in_a: bool,
    pub gen_in_b: bool,
}

impl Origin {
    pub fn is_generator(&self) -> bool {
        self.gen_in_a || self.gen_in_b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportSource {
    Summed,
    Bitset,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MergeEntry {
    pub itemset: Itemset,
    pub support: usize,
    pub origin: Origin,
    pub support_source: SupportSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionKind {
    Summed { left: usize, right: usize },
    BitsetAccept,
    BitsetReject,
}

/// One merge decision, for audit logs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeDecision {
    pub itemset: Itemset,
    pub kind: DecisionKind,
    pub support: usize,
}

/// `ITEMSET ; decision=... ; supp=N`, with the summed addends appended as
/// `; parts=L+R`.
impl fmt::Display for MergeDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let decision = match self.kind {
            DecisionKind::Summed { .. } => "summed",
            DecisionKind::BitsetAccept => "bitset-accept",
            DecisionKind::BitsetReject => "bitset-reject",
        };
        write!(f, "{} ; decision={decision} ; supp={}", self.itemset, self.support)?;
        if let DecisionKind::Summed { left, right } = self.kind {
            write!(f, " ; parts={left}+{right}")?;
        }
        Ok(())
    }
}

/// The two lists a merge consumes from one side, plus the tid coverage and
/// every local generator seen below this point of the merge tree.
#[derive(Debug, Clone)]
pub struct MergeInput {
    pub closed: Vec<(Itemset, usize)>,
    pub generators: Vec<(Itemset, usize)>,
    pub mask: TidMask,
    pub generator_pool: BTreeSet<Itemset>,
}

impl MergeInput {
    pub fn from_patterns(ps: &PatternSet, mask: TidMask) -> MergeInput {
        let closed = ps
            .patterns
            .iter()
            .map(|p| (p.closed.clone(), p.support))
            .collect();
        let generators: Vec<(Itemset, usize)> = ps
            .patterns
            .iter()
            .flat_map(|p| p.generators.iter().map(move |g| (g.clone(), p.support)))
            .collect();
        let generator_pool = generators.iter().map(|(g, _)| g.clone()).collect();
        MergeInput {
            closed,
            generators,
            mask,
            generator_pool,
        }
    }

    /// Re-wraps a merge result for the next tree level: every entry becomes
    /// a closed itemset, and entries seen as generators stay generators.
    pub fn from_merge(res: MergeResult) -> MergeInput {
        let generators = res
            .entries
            .iter()
            .filter(|e| e.origin.is_generator())
            .map(|e| (e.itemset.clone(), e.support))
            .collect();
        let closed = res
            .entries
            .into_iter()
            .map(|e| (e.itemset, e.support))
            .collect();
        MergeInput {
            closed,
            generators,
            mask: res.mask,
            generator_pool: res.generator_pool,
        }
    }
}

#[derive(Debug, Clone)]
pub struct MergeResult {
    pub entries: Vec<MergeEntry>,
    pub mask: TidMask,
    pub minsup_abs: usize,
    pub generator_pool: BTreeSet<Itemset>,
    pub decisions: Vec<MergeDecision>,
}

/// Merges two pattern sets mined over disjoint tid ranges whose union is
/// `mask`.
pub fn ufcigs_merge(
    a: &PatternSet,
    b: &PatternSet,
    index: &TidIndex,
    mask: &TidMask,
    minsup_abs: usize,
) -> Result<MergeResult> {
    if a.context_size + b.context_size != mask.count() {
        return Err(Error::InvalidArgument(format!(
            "merge mask covers {} transactions but the inputs cover {} + {}",
            mask.count(),
            a.context_size,
            b.context_size
        )));
    }
    // Without per-side masks only coverage size can be checked; callers with
    // exact masks should use `merge_inputs`.
    let (left, right) = split_mask(mask, a.context_size);
    merge_inputs(
        &MergeInput::from_patterns(a, left),
        &MergeInput::from_patterns(b, right),
        index,
        minsup_abs,
    )
}

fn split_mask(mask: &TidMask, first: usize) -> (TidMask, TidMask) {
    let positions: Vec<usize> = mask.bits().iter().collect();
    let width = mask.bits().width();
    let mut left = TidSet::empty(width);
    let mut right = TidSet::empty(width);
    for (k, p) in positions.into_iter().enumerate() {
        if k < first {
            left.insert(p);
        } else {
            right.insert(p);
        }
    }
    (TidMask::from_bits(left), TidMask::from_bits(right))
}

/// The merge rules, over inputs carrying their own masks.
pub fn merge_inputs(
    a: &MergeInput,
    b: &MergeInput,
    index: &TidIndex,
    minsup_abs: usize,
) -> Result<MergeResult> {
    if !a.mask.is_disjoint(&b.mask) {
        return Err(Error::InvalidArgument(
            "merge inputs must cover disjoint transactions".into(),
        ));
    }
    let mask = a.mask.union(&b.mask);
    let lookup = |v: &[(Itemset, usize)]| -> HashMap<Itemset, usize> { v.iter().cloned().collect() };
    let (closed_a, gens_a) = (lookup(&a.closed), lookup(&a.generators));
    let (closed_b, gens_b) = (lookup(&b.closed), lookup(&b.generators));

    let mut merger = Merger {
        index,
        mask: &mask,
        minsup_abs,
        emitted: HashSet::new(),
        entries: Vec::new(),
        decisions: Vec::new(),
    };
    let origin_of = |x: &Itemset| Origin {
        closed_in_a: closed_a.contains_key(x),
        closed_in_b: closed_b.contains_key(x),
        gen_in_a: gens_a.contains_key(x),
        gen_in_b: gens_b.contains_key(x),
    };

    // closed itemsets: summed when the other side lists them as closed or generator
    for (c, s) in &a.closed {
        let other = closed_b.get(c).or_else(|| gens_b.get(c)).copied();
        merger.decide(c, origin_of(c), other.map(|o| (*s, o)));
    }
    for (c, s) in &b.closed {
        let other = closed_a.get(c).or_else(|| gens_a.get(c)).copied();
        merger.decide(c, origin_of(c), other.map(|o| (o, *s)));
    }
    // generators not already handled as a closed itemset on either side
    for (g, s) in &a.generators {
        if closed_a.contains_key(g) || closed_b.contains_key(g) {
            continue;
        }
        merger.decide(g, origin_of(g), gens_b.get(g).map(|o| (*s, *o)));
    }
    for (g, s) in &b.generators {
        if closed_a.contains_key(g) || closed_b.contains_key(g) {
            continue;
        }
        merger.decide(g, origin_of(g), gens_a.get(g).map(|o| (*o, *s)));
    }

    let Merger {
        mut entries,
        decisions,
        ..
    } = merger;
    entries.sort_by(|x, y| canonical_order((&x.itemset, x.support), (&y.itemset, y.support)));
    Ok(MergeResult {
        entries,
        mask,
        minsup_abs,
        generator_pool: a.generator_pool.union(&b.generator_pool).cloned().collect(),
        decisions,
    })
}

struct Merger<'a> {
    index: &'a TidIndex,
    mask: &'a TidMask,
    minsup_abs: usize,
    emitted: HashSet<Itemset>,
    entries: Vec<MergeEntry>,
    decisions: Vec<MergeDecision>,
}

impl Merger<'_> {
    /// `known` carries both local supports when the other side has them.
    fn decide(&mut self, x: &Itemset, origin: Origin, known: Option<(usize, usize)>) {
        if self.emitted.contains(x) {
            return;
        }
        let (support, source, kind) = match known {
            Some((left, right)) => (
                left + right,
                SupportSource::Summed,
                DecisionKind::Summed { left, right },
            ),
            None => {
                let s = self.index.support(x, self.mask);
                let kind = if s >= self.minsup_abs {
                    DecisionKind::BitsetAccept
                } else {
                    DecisionKind::BitsetReject
                };
                (s, SupportSource::Bitset, kind)
            }
        };
        self.decisions.push(MergeDecision {
            itemset: x.clone(),
            kind,
            support,
        });
        if support < self.minsup_abs {
            return;
        }
        self.emitted.insert(x.clone());
        self.entries.push(MergeEntry {
            itemset: x.clone(),
            support,
            origin,
            support_source: source,
        });
    }
}

/// Splits entries into those with no equal-support proper superset among
/// the entries (kept) and the rest (removed).
pub fn prune_closure(res: &MergeResult) -> (Vec<MergeEntry>, Vec<MergeEntry>) {
    let mut by_support: HashMap<usize, Vec<&MergeEntry>> = HashMap::new();
    for e in &res.entries {
        by_support.entry(e.support).or_default().push(e);
    }
    let (mut kept, mut removed) = (Vec::new(), Vec::new());
    for e in &res.entries {
        let absorbed = by_support[&e.support]
            .iter()
            .any(|y| e.itemset.is_proper_subset_of(&y.itemset));
        if absorbed {
            removed.push(e.clone());
        } else {
            kept.push(e.clone());
        }
    }
    (kept, removed)
}

/// Assigns minimal generators to each kept closed itemset.
///
/// The candidate pool is the removed entries, every entry flagged as a
/// local generator, and `extra_pool`; pool supports are recounted on the
/// index. For a closed `C`, the candidates are pool members `g ⊂ C` with
/// `supp(g) = supp(C)`. When there are none, pool members inside `C` with
/// larger support are joined pairwise, level by level, until equal-support
/// unions appear. Each candidate (or `C` itself when the search finds
/// nothing) is then shrunk item by item while its support stays equal, so
/// every assigned generator is free.
pub fn find_generators(
    kept: &[MergeEntry],
    removed: &[MergeEntry],
    extra_pool: &BTreeSet<Itemset>,
    index: &TidIndex,
    mask: &TidMask,
) -> PatternSet {
    let mut pool: BTreeSet<&Itemset> = removed.iter().map(|e| &e.itemset).collect();
    pool.extend(
        kept.iter()
            .chain(removed)
            .filter(|e| e.origin.is_generator())
            .map(|e| &e.itemset),
    );
    pool.extend(extra_pool);

    // g ⊂ C has supp(g) = supp(C) iff both have the same extent
    let pool: Vec<PoolMember> = pool
        .into_par_iter()
        .filter_map(|g| {
            let extent = index.extent(g, mask).filter(|e| !e.is_empty())?;
            Some(PoolMember {
                signature: signature(g),
                itemset: g.clone(),
                support: extent.count(),
                extent,
            })
        })
        .collect();
    let mut by_extent: HashMap<&TidSet, Vec<&PoolMember>> = HashMap::new();
    for m in &pool {
        by_extent.entry(&m.extent).or_default().push(m);
    }

    let patterns = kept
        .par_iter()
        .map(|c| {
            let direct: Vec<Itemset> = index
                .extent(&c.itemset, mask)
                .and_then(|e| by_extent.get(&e))
                .into_iter()
                .flatten()
                .filter(|m| m.itemset.is_proper_subset_of(&c.itemset))
                .map(|m| m.itemset.clone())
                .collect();
            let found = if !direct.is_empty() {
                direct
            } else if is_free(&c.itemset, c.support, index, mask) {
                Vec::new()
            } else {
                joined_candidates(&c.itemset, c.support, &pool, index, mask)
            };
            let generators = minimal_or_self(found, &c.itemset)
                .into_iter()
                .map(|g| shrink_to_free(g, c.support, index, mask))
                .collect();
            ClosedPattern::new(c.itemset.clone(), c.support, minimal(generators))
        })
        .collect();
    let minsup = kept.iter().map(|e| e.support).min().unwrap_or(1);
    PatternSet::new(patterns, mask.count(), minsup)
}

struct PoolMember {
    signature: u64,
    itemset: Itemset,
    support: usize,
    extent: TidSet,
}

/// True when every immediate subset has larger support, so no proper
/// subset can share the support.
fn is_free(x: &Itemset, support: usize, index: &TidIndex, mask: &TidMask) -> bool {
    (0..x.len()).all(|pos| index.support(&x.without_index(pos), mask) > support)
}

/// Equal-support unions of pool members lying strictly inside `closed`.
fn joined_candidates(
    closed: &Itemset,
    support: usize,
    pool: &[PoolMember],
    index: &TidIndex,
    mask: &TidMask,
) -> Vec<Itemset> {
    let sig = signature(closed);
    let atoms: Vec<&Itemset> = pool
        .iter()
        .filter(|m| m.support > support && m.signature & !sig == 0)
        .filter(|m| m.itemset.is_proper_subset_of(closed))
        .map(|m| &m.itemset)
        .collect();
    let mut seen: HashSet<Itemset> = atoms.iter().map(|&a| a.clone()).collect();
    let mut found: Vec<Itemset> = Vec::new();
    let mut frontier: Vec<Itemset> = atoms.iter().map(|&a| a.clone()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for y in &atoms {
                let u = x.union(y);
                if u.len() == x.len() || !u.is_proper_subset_of(closed) || !seen.insert(u.clone()) {
                    continue;
                }
                if found.iter().any(|f| f.is_subset_of(&u)) {
                    continue;
                }
                match index.support(&u, mask) {
                    s if s == support => found.push(u),
                    s if s > support => next.push(u),
                    _ => {}
                }
            }
        }
        frontier = next;
    }
    found
}

/// One bit per item modulo 64; `a ⊆ b` implies `sig(a) & !sig(b) == 0`.
fn signature(x: &Itemset) -> u64 {
    x.items().iter().fold(0, |acc, &i| acc | 1 << (i % 64))
}

/// Drops items while the support is unchanged; the result is free.
fn shrink_to_free(mut x: Itemset, support: usize, index: &TidIndex, mask: &TidMask) -> Itemset {
    while let Some(smaller) = (0..x.len())
        .map(|pos| x.without_index(pos))
        .find(|y| index.support(y, mask) == support)
    {
        x = smaller;
    }
    x
}

fn minimal(found: Vec<Itemset>) -> Vec<Itemset> {
    found
        .iter()
        .filter(|g| !found.iter().any(|h| h.is_proper_subset_of(g)))
        .cloned()
        .collect()
}

fn minimal_or_self(found: Vec<Itemset>, closed: &Itemset) -> Vec<Itemset> {
    let mut minimal = minimal(found);
    if minimal.is_empty() {
        minimal.push(closed.clone());
    }
    minimal
}

/// Options for [`run_dac_with`].
#[derive(Debug, Clone, Copy)]
pub struct DacOptions {
    pub n_partitions: usize,
    pub minsup: MinsupSpec,
}

#[derive(Debug, Clone)]
pub struct DacOutcome {
    pub patterns: PatternSet,
    /// Every merge decision, in tree order (left subtree, right subtree,
    /// then the node itself).
    pub decisions: Vec<MergeDecision>,
    /// Absolute threshold used to mine each partition.
    pub local_minsup: Vec<usize>,
}

/// Partitioned mining with a balanced binary merge tree.
pub fn run_dac(
    db: &TransactionDatabase,
    n_partitions: usize,
    minsup: MinsupSpec,
) -> Result<PatternSet> {
    run_dac_with(db, DacOptions { n_partitions, minsup }).map(|o| o.patterns)
}

pub fn run_dac_with(db: &TransactionDatabase, opts: DacOptions) -> Result<DacOutcome> {
    let global_minsup = opts.minsup.absolute(db.n_transactions());
    if opts.n_partitions == 1 {
        return Ok(DacOutcome {
            patterns: mine_closed(db, global_minsup),
            decisions: Vec::new(),
            local_minsup: vec![global_minsup],
        });
    }
    let parts = partition_db(db, opts.n_partitions)?;
    let index = TidIndex::build(db);

    let leaves: Vec<(MergeInput, usize)> = parts
        .par_iter()
        .map(|p| {
            let mask = index.range_mask(&p.tid_range);
            let local = opts.minsup.absolute(p.len());
            let ps = mine_closed_masked(&index, &mask, local);
            (MergeInput::from_patterns(&ps, mask), local)
        })
        .collect();
    let local_minsup = leaves.iter().map(|(_, m)| *m).collect();
    let leaves: Vec<MergeInput> = leaves.into_iter().map(|(l, _)| l).collect();

    let root = merge_tree(&leaves, &index, opts.minsup)?;
    let (kept, removed) = prune_closure(&root);
    let mut patterns = find_generators(&kept, &removed, &root.generator_pool, &index, &root.mask);
    patterns.minsup_abs = global_minsup;
    Ok(DacOutcome {
        patterns,
        decisions: root.decisions,
        local_minsup,
    })
}

fn merge_tree(leaves: &[MergeInput], index: &TidIndex, minsup: MinsupSpec) -> Result<MergeResult> {
    debug_assert!(leaves.len() >= 2);
    let mid = leaves.len().div_ceil(2);
    let (left, right) = rayon::join(
        || subtree(&leaves[..mid], index, minsup),
        || subtree(&leaves[mid..], index, minsup),
    );
    let (left, mut left_log) = left?;
    let (right, right_log) = right?;
    let threshold = minsup.absolute(left.mask.count() + right.mask.count());
    let mut res = merge_inputs(&left, &right, index, threshold)?;
    left_log.extend(right_log);
    left_log.append(&mut res.decisions);
    res.decisions = left_log;
    Ok(res)
}

fn subtree(
    leaves: &[MergeInput],
    index: &TidIndex,
    minsup: MinsupSpec,
) -> Result<(MergeInput, Vec<MergeDecision>)> {
    if let [leaf] = leaves {
        return Ok((leaf.clone(), Vec::new()));
    }
    let mut res = merge_tree(leaves, index, minsup)?;
    let log = std::mem::take(&mut res.decisions);
    Ok((MergeInput::from_merge(res), log))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::worked_example;

    fn set<const N: usize>(items: [u32; N]) -> Itemset {
        Itemset::from(items)
    }

    struct Example {
        index: TidIndex,
        a: MergeInput,
        b: MergeInput,
    }

    fn example() -> Example {
        let db = worked_example();
        let index = TidIndex::build(&db);
        let m1 = index.range_mask(&(1..=6));
        let m2 = index.range_mask(&(7..=12));
        let a = MergeInput::from_patterns(&mine_closed_masked(&index, &m1, 4), m1);
        let b = MergeInput::from_patterns(&mine_closed_masked(&index, &m2, 4), m2);
        Example { index, a, b }
    }

    fn decision<'a>(res: &'a MergeResult, x: &Itemset) -> &'a MergeDecision {
        res.decisions.iter().find(|d| &d.itemset == x).unwrap()
    }

    #[test]
    fn worked_example_merge_decisions() {
        let ex = example();
        let res = merge_inputs(&ex.a, &ex.b, &ex.index, 8).unwrap();
        let d = decision(&res, &set([1, 3, 5, 7, 9, 13, 15, 17]));
        assert_eq!(d.kind, DecisionKind::Summed { left: 6, right: 4 });
        assert_eq!(d.support, 10);
        let d = decision(&res, &set([1, 3, 5, 7, 9, 11, 13, 15, 17]));
        assert_eq!((d.kind, d.support), (DecisionKind::BitsetAccept, 8));
        let d = decision(&res, &set([11, 19]));
        assert_eq!((d.kind, d.support), (DecisionKind::BitsetReject, 6));
        let d = decision(&res, &Itemset::empty());
        assert_eq!(d.kind, DecisionKind::Summed { left: 6, right: 6 });
        assert_eq!(decision(&res, &set([11])).kind, DecisionKind::Summed { left: 5, right: 4 });
        assert_eq!(decision(&res, &set([19])).kind, DecisionKind::Summed { left: 5, right: 4 });
        assert_eq!(
            (decision(&res, &set([15])).kind, decision(&res, &set([15])).support),
            (DecisionKind::BitsetAccept, 10)
        );
        assert_eq!(res.entries.len(), 9);
        let names: HashSet<&Itemset> = res.entries.iter().map(|e| &e.itemset).collect();
        assert_eq!(names.len(), res.entries.len());
    }

    #[test]
    fn trace_line_format() {
        let ex = example();
        let res = merge_inputs(&ex.a, &ex.b, &ex.index, 8).unwrap();
        let lines: Vec<String> = res.decisions.iter().map(ToString::to_string).collect();
        assert!(lines.contains(&"1 3 5 7 9 13 15 17 ; decision=summed ; supp=10 ; parts=6+4".into()));
        assert!(lines.contains(&"{} ; decision=summed ; supp=12 ; parts=6+6".into()));
        assert!(lines.contains(&"11 19 ; decision=bitset-reject ; supp=6".into()));
    }

    #[test]
    fn pruning_removes_absorbed_entries() {
        let ex = example();
        let res = merge_inputs(&ex.a, &ex.b, &ex.index, 8).unwrap();
        let (kept, removed) = prune_closure(&res);
        let removed: BTreeSet<Itemset> = removed.into_iter().map(|e| e.itemset).collect();
        assert_eq!(
            removed,
            [Itemset::empty(), set([11]), set([15]), set([19])].into_iter().collect()
        );
        assert_eq!(kept.len(), 5);
    }

    #[test]
    fn entry_without_equal_superset_is_kept() {
        let mask = TidIndex::build(&worked_example()).full_mask();
        let entry = |items: Itemset, support| MergeEntry {
            itemset: items,
            support,
            origin: Origin::default(),
            support_source: SupportSource::Bitset,
        };
        let res = MergeResult {
            entries: vec![entry(set([1]), 5), entry(set([1, 2]), 4)],
            mask,
            minsup_abs: 1,
            generator_pool: BTreeSet::new(),
            decisions: Vec::new(),
        };
        let (kept, removed) = prune_closure(&res);
        assert_eq!(kept.len(), 2);
        assert!(removed.is_empty());
    }

    #[test]
    fn generator_assignment_on_worked_example() {
        let ex = example();
        let res = merge_inputs(&ex.a, &ex.b, &ex.index, 8).unwrap();
        let (kept, removed) = prune_closure(&res);
        let ps = find_generators(&kept, &removed, &res.generator_pool, &ex.index, &res.mask);
        let gens = |c: Itemset| ps.get(&c).unwrap().generators.clone();
        assert_eq!(gens(set([1, 3, 5, 7, 9, 13, 17])), vec![Itemset::empty()]);
        assert_eq!(gens(set([1, 3, 5, 7, 9, 13, 15, 17])), vec![set([15])]);
        assert_eq!(gens(set([1, 3, 5, 7, 9, 11, 13, 17])), vec![set([11])]);
        assert_eq!(gens(set([1, 3, 5, 7, 9, 13, 17, 19])), vec![set([19])]);
        assert_eq!(gens(set([1, 3, 5, 7, 9, 11, 13, 15, 17])), vec![set([11, 15])]);
    }

    fn lone_entry(itemset: Itemset, support: usize) -> Vec<MergeEntry> {
        vec![MergeEntry {
            itemset,
            support,
            origin: Origin::default(),
            support_source: SupportSource::Bitset,
        }]
    }

    #[test]
    fn free_closed_set_with_empty_pool_is_its_own_generator() {
        let db = TransactionDatabase::from_rows([vec![1, 2], vec![1], vec![2], vec![1, 2]]);
        let index = TidIndex::build(&db);
        let kept = lone_entry(set([1, 2]), 2);
        let ps = find_generators(&kept, &[], &BTreeSet::new(), &index, &index.full_mask());
        assert_eq!(ps.patterns[0].generators, vec![set([1, 2])]);
    }

    #[test]
    fn fallback_is_shrunk_to_a_free_subset() {
        let db = TransactionDatabase::from_rows([vec![1, 2], vec![1, 2], vec![3]]);
        let index = TidIndex::build(&db);
        let kept = lone_entry(set([1, 2]), 2);
        let ps = find_generators(&kept, &[], &BTreeSet::new(), &index, &index.full_mask());
        assert_eq!(ps.patterns[0].generators, vec![set([2])]);
    }

    #[test]
    fn overlapping_inputs_are_rejected() {
        let ex = example();
        assert!(matches!(
            merge_inputs(&ex.a, &ex.a, &ex.index, 8),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn pattern_set_merge_checks_coverage() {
        let db = worked_example();
        let index = TidIndex::build(&db);
        let ps = mine_closed(&db, 8);
        let err = ufcigs_merge(&ps, &ps, &index, &index.full_mask(), 8).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));

        let parts = partition_db(&db, 2).unwrap();
        let a = mine_closed(&parts[0].database, 4);
        let b = mine_closed(&parts[1].database, 4);
        let res = ufcigs_merge(&a, &b, &index, &index.full_mask(), 8).unwrap();
        assert_eq!(res.entries.len(), 9);
    }

    #[test]
    fn dac_on_worked_example() {
        let out = run_dac_with(
            &worked_example(),
            DacOptions {
                n_partitions: 2,
                minsup: MinsupSpec::new(0.6).unwrap(),
            },
        )
        .unwrap();
        assert_eq!(out.local_minsup, vec![4, 4]);
        let supports: Vec<usize> = out.patterns.patterns.iter().map(|p| p.support).collect();
        assert_eq!(supports, vec![12, 10, 9, 9, 8]);
        assert_eq!(out.patterns, mine_closed(&worked_example(), 8));
    }

    #[test]
    fn dac_with_one_partition_is_sequential() {
        let db = worked_example();
        let spec = MinsupSpec::new(0.5).unwrap();
        assert_eq!(run_dac(&db, 1, spec).unwrap(), mine_closed(&db, 6));
    }
}
