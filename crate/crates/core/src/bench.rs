//! Timing and recall records for sequential vs partitioned runs.

use std::io::Write;
use std::time::Instant;

use crate::db::{MinsupSpec, TransactionDatabase};
use crate::error::Result;
use crate::merge::run_dac;
use crate::miner::mine_closed;
use crate::oracle::compare;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Dac,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Sequential => "sequential",
            Mode::Dac => "dac",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub dataset: String,
    pub minsup_rel: f64,
    pub mode: Mode,
    pub n_partitions: usize,
    pub wall_ms: f64,
    pub n_closed: usize,
    /// Only for partitioned runs.
    pub recall_vs_sequential: Option<f64>,
}

pub const CSV_HEADER: [&str; 7] = [
    "dataset",
    "minsup",
    "mode",
    "partitions",
    "wall_ms",
    "n_closed",
    "recall",
];

/// Runs both modes once; timing excludes parsing.
pub fn bench_dataset(
    name: &str,
    db: &TransactionDatabase,
    minsup: MinsupSpec,
    partitions: usize,
) -> Result<[BenchRecord; 2]> {
    let start = Instant::now();
    let seq = mine_closed(db, minsup.absolute(db.n_transactions()));
    let seq_ms = start.elapsed().as_secs_f64() * 1e3;

    let start = Instant::now();
    let dac = run_dac(db, partitions, minsup)?;
    let dac_ms = start.elapsed().as_secs_f64() * 1e3;

    let recall = compare(&dac, &seq).recall;
    let record = |mode, n_partitions, wall_ms, n_closed, recall| BenchRecord {
        dataset: name.to_string(),
        minsup_rel: minsup.relative(),
        mode,
        n_partitions,
        wall_ms,
        n_closed,
        recall_vs_sequential: recall,
    };
    Ok([
        record(Mode::Sequential, 1, seq_ms, seq.len(), None),
        record(Mode::Dac, partitions, dac_ms, dac.len(), Some(recall)),
    ])
}

pub fn write_csv<W: Write>(out: W, records: &[BenchRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.dataset.clone(),
            r.minsup_rel.to_string(),
            r.mode.as_str().to_string(),
            r.n_partitions.to_string(),
            format!("{:.3}", r.wall_ms),
            r.n_closed.to_string(),
            r.recall_vs_sequential.map(|x| x.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
