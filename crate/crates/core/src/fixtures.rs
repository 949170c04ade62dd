//! Small reference contexts used by tests and documentation.

use crate::db::TransactionDatabase;
use crate::itemset::Item;

/// The 12-transaction context behind the merge walk-through, rebuilt from
/// its item → tid table.
pub fn worked_example() -> TransactionDatabase {
    const TABLE: &[(Item, &[u32])] = &[
        (1, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        (3, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        (5, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        (7, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        (9, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        (11, &[1, 3, 4, 5, 6, 7, 9, 10, 12]),
        (12, &[2, 8, 11]),
        (13, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        (15, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 12]),
        (16, &[9, 10]),
        (17, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        (19, &[1, 2, 3, 5, 6, 8, 9, 10, 11]),
        (20, &[4, 7, 12]),
    ];
    TransactionDatabase::from_rows((1..=12u32).map(|tid| {
        TABLE
            .iter()
            .filter(move |(_, tids)| tids.contains(&tid))
            .map(|&(item, _)| item)
            .collect::<Vec<_>>()
    }))
}

/// The classic six-object context used to illustrate Close, with A..E
/// encoded as 1..5.
pub fn close_context() -> TransactionDatabase {
    TransactionDatabase::from_rows([
        vec![1, 3, 4],
        vec![2, 3, 5],
        vec![1, 2, 3, 5],
        vec![2, 5],
        vec![1, 2, 3, 5],
        vec![2, 3, 5],
    ])
}
