//! Randomized checks of the miner, the tid index and the partitioned
//! pipeline against the exhaustive oracle.

use std::collections::{BTreeSet, HashMap};

use closedmine::oracle::SupportTable;
use closedmine::{
    mine_closed, oracle_closed, partition_db, run_dac, Itemset, MinsupSpec, TidIndex,
    TransactionDatabase,
};
use proptest::prelude::*;

fn small_db(max_items: u32, max_rows: usize) -> impl Strategy<Value = TransactionDatabase> {
    proptest::collection::vec(
        proptest::collection::btree_set(1..=max_items, 1..=max_items as usize),
        1..=max_rows,
    )
    .prop_map(TransactionDatabase::from_rows)
}

fn subsets_of(x: &Itemset) -> Vec<Itemset> {
    let items = x.items();
    (0..1usize << items.len())
        .map(|m| {
            Itemset::new(
                items
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| m & (1 << k) != 0)
                    .map(|(_, &i)| i),
            )
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn miner_matches_oracle(db in small_db(8, 15), minsup in 1usize..8) {
        prop_assert_eq!(mine_closed(&db, minsup), oracle_closed(&db, minsup).unwrap());
    }

    #[test]
    fn index_support_matches_scan(db in small_db(8, 15),
                                  x in proptest::collection::btree_set(0u32..10, 0..4)) {
        let index = TidIndex::build(&db);
        let x = Itemset::new(x);
        prop_assert_eq!(index.support(&x, &index.full_mask()), db.scan_support(&x));
        for t in db.transactions() {
            for item in db.universe().items() {
                let bit = index.tidset(*item).unwrap().contains(t.tid as usize - 1);
                prop_assert_eq!(bit, t.items.contains(*item));
            }
        }
    }

    #[test]
    fn anti_monotone_support(db in small_db(8, 15),
                             x in proptest::collection::btree_set(1u32..9, 0..4),
                             extra in proptest::collection::btree_set(1u32..9, 0..3)) {
        let index = TidIndex::build(&db);
        let full = index.full_mask();
        let x = Itemset::new(x);
        let y = x.union(&Itemset::new(extra));
        prop_assert!(index.support(&x, &full) >= index.support(&y, &full));
    }

    /// Every generator's proper subsets are generators of other classes, and
    /// every frequent itemset lies in exactly one [generator, closed] interval.
    #[test]
    fn generators_form_order_ideal_and_classes_partition(db in small_db(7, 12), minsup in 1usize..6) {
        let ps = mine_closed(&db, minsup);
        let index = TidIndex::build(&db);
        let full = index.full_mask();
        let gens: BTreeSet<&Itemset> = ps.patterns.iter().flat_map(|p| &p.generators).collect();
        for p in &ps.patterns {
            for g in &p.generators {
                prop_assert!(g.is_subset_of(&p.closed));
                prop_assert_eq!(index.support(g, &full), p.support);
                prop_assert_eq!(&index.closure(g, &full).unwrap(), &p.closed);
                for pos in 0..g.len() {
                    prop_assert!(gens.contains(&g.without_index(pos)));
                }
            }
        }
        let table = SupportTable::build(&db).unwrap();
        for x in table.frequent(minsup).map(|m| table.itemset_of(m)) {
            let homes = ps
                .patterns
                .iter()
                .filter(|p| x.is_subset_of(&p.closed) && p.generators.iter().any(|g| g.is_subset_of(&x)))
                .count();
            prop_assert_eq!(homes, 1, "{:?}", x);
        }
    }

    /// Positive border elements are closed and reported; negative border
    /// elements have only frequent proper subsets.
    #[test]
    fn border_sanity(db in small_db(6, 10), minsup in 1usize..5) {
        let table = SupportTable::build(&db).unwrap();
        let ps = oracle_closed(&db, minsup).unwrap();
        let closed: BTreeSet<&Itemset> = ps.patterns.iter().map(|p| &p.closed).collect();
        let n = table.n_items();
        let frequent = |m: usize| table.support_of_mask(m) >= minsup;
        for m in 0..1usize << n {
            let supersets = (0..n).filter(|b| m & (1 << b) == 0).map(|b| m | 1 << b);
            if frequent(m) && supersets.clone().all(|s| !frequent(s)) {
                prop_assert!(closed.contains(&table.itemset_of(m)));
            }
            let subsets: Vec<usize> = (0..n).filter(|b| m & (1 << b) != 0).map(|b| m & !(1 << b)).collect();
            if !frequent(m) && subsets.iter().all(|&s| frequent(s)) {
                for sub in subsets_of(&table.itemset_of(m)) {
                    if sub != table.itemset_of(m) {
                        prop_assert!(table.support(&sub) >= minsup);
                    }
                }
            }
        }
    }

    /// Itemsets closed in one partition stay closed in the whole database.
    #[test]
    fn local_closedness_survives_merging(db in small_db(7, 14), n in 2usize..4) {
        prop_assume!(n <= db.n_transactions());
        let index = TidIndex::build(&db);
        let full = index.full_mask();
        for part in partition_db(&db, n).unwrap() {
            for p in mine_closed(&part.database, 1).patterns {
                prop_assert_eq!(index.closure(&p.closed, &full).unwrap(), p.closed);
            }
        }
    }

    #[test]
    fn dac_supports_are_exact(db in small_db(8, 16), n in 2usize..5, rel in 0.05f64..=1.0) {
        prop_assume!(n <= db.n_transactions());
        let spec = MinsupSpec::new(rel).unwrap();
        let global = spec.absolute(db.n_transactions());
        let table = SupportTable::build(&db).unwrap();
        let index = TidIndex::build(&db);
        let out = run_dac(&db, n, spec).unwrap();
        let mut seen = HashMap::new();
        for p in &out.patterns {
            prop_assert_eq!(table.support(&p.closed), p.support);
            prop_assert!(p.support >= global);
            prop_assert!(seen.insert(p.closed.clone(), ()).is_none());
            for g in &p.generators {
                prop_assert!(g.is_subset_of(&p.closed));
                prop_assert_eq!(index.support(g, &index.full_mask()), p.support);
                for pos in 0..g.len() {
                    prop_assert!(table.support(&g.without_index(pos)) > p.support);
                }
            }
        }
        // post-pruning: no reported itemset has an equal-support superset in the output
        for a in &out.patterns {
            for b in &out.patterns {
                prop_assert!(!(a.closed.is_proper_subset_of(&b.closed) && a.support == b.support));
            }
        }
    }
}
