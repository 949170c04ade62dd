use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::db::TransactionDatabase;
use crate::error::{Error, Result};
use crate::itemset::Item;

/// Random context where each item joins each transaction independently with
/// probability `density`. Empty rows get one uniformly chosen item so every
/// transaction is non-empty. Items are numbered `1..=n_items`.
pub fn gen_synthetic(
    n_trans: usize,
    n_items: usize,
    density: f64,
    seed: u64,
) -> Result<TransactionDatabase> {
    if n_items == 0 || n_items > Item::MAX as usize {
        return Err(Error::InvalidArgument(format!("bad item count {n_items}")));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidArgument(format!(
            "density must lie in [0, 1], got {density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<Item>> = (0..n_trans)
        .map(|_| {
            let mut row: Vec<Item> = (1..=n_items as Item)
                .filter(|_| rng.gen_bool(density))
                .collect();
            if row.is_empty() {
                row.push(rng.gen_range(1..=n_items as Item));
            }
            row
        })
        .collect();
    Ok(TransactionDatabase::from_rows(rows))
}
