//! Campaign execution: dispatches every prime in a range to every selected
//! statement over a fixed-size worker pool and emits records in ascending
//! (p, statement) order, byte-identical for any thread count.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use delannoy::ntheory::sieve_primes;
use delannoy::suite::{verify_statement, Outcome, StatementId, VerificationRecord};
use num_rational::Rational64;

use crate::emit::{write_preamble, write_record, OutputFormat};

/// Primes are dispatched to workers in blocks of this many; records are
/// buffered per block, so output order is independent of scheduling.
const BLOCK: usize = 256;

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub statements: Vec<StatementId>,
    pub pmin: u32,
    pub pmax: u32,
    pub x_args: Vec<Rational64>,
    pub threads: usize,
    pub fail_fast: bool,
}

impl CampaignConfig {
    /// Sorts and dedupes the statement list; emission order is ascending
    /// (p, statement) regardless of how the selection was written.
    pub fn normalize(&mut self) {
        self.statements.sort();
        self.statements.dedup();
    }
}

#[derive(Clone, Copy, Default, Debug)]
pub struct StatementCounts {
    pub checked: u64,
    pub ok: u64,
    pub failed: u64,
    pub out_of_domain: u64,
}

#[derive(Debug, Default)]
pub struct CampaignSummary {
    pub counts: BTreeMap<StatementId, StatementCounts>,
    pub first_failure: BTreeMap<StatementId, VerificationRecord>,
    pub elapsed: Duration,
}

impl CampaignSummary {
    pub fn total_checked(&self) -> u64 {
        self.counts.values().map(|c| c.checked).sum()
    }

    pub fn total_failed(&self) -> u64 {
        self.counts.values().map(|c| c.failed).sum()
    }

    fn absorb(&mut self, rec: &VerificationRecord) {
        let c = self.counts.entry(rec.statement).or_default();
        c.checked += 1;
        match rec.outcome() {
            Outcome::Pass => c.ok += 1,
            Outcome::Fail => {
                c.failed += 1;
                self.first_failure.entry(rec.statement).or_insert_with(|| rec.clone());
            }
            Outcome::OutOfDomain => c.out_of_domain += 1,
        }
    }

    /// Human-readable digest, one line per statement plus a total.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (stmt, c) in &self.counts {
            out.push_str(&format!(
                "{}: checked={} ok={} failed={} out_of_domain={}\n",
                stmt.name(),
                c.checked,
                c.ok,
                c.failed,
                c.out_of_domain
            ));
        }
        for (stmt, rec) in &self.first_failure {
            out.push_str(&format!(
                "first failure for {}: p={} lhs={} rhs={}{}\n",
                stmt.name(),
                rec.p,
                rec.lhs,
                rec.rhs,
                if rec.note.is_empty() { String::new() } else { format!(" [{}]", rec.note) }
            ));
        }
        out.push_str(&format!(
            "total: checked={} failed={} elapsed={:.3}s\n",
            self.total_checked(),
            self.total_failed(),
            self.elapsed.as_secs_f64()
        ));
        out
    }
}

fn prime_records(cfg: &CampaignConfig, p: u32) -> Vec<VerificationRecord> {
    let mut recs = Vec::new();
    for &stmt in &cfg.statements {
        recs.extend(verify_statement(stmt, p, &cfg.x_args));
    }
    recs
}

/// Runs the campaign, writing records to `out` and the summary into the
/// return value. With `fail_fast` dispatch stops after the first failing
/// block; records of completed blocks are always flushed.
pub fn run_campaign<W: Write>(
    cfg: &CampaignConfig,
    format: OutputFormat,
    out: &mut W,
) -> io::Result<CampaignSummary> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| io::Error::other(e.to_string()))?;
    let primes = sieve_primes(cfg.pmin, cfg.pmax);
    let mut summary = CampaignSummary::default();
    write_preamble(out, format)?;
    'blocks: for block in primes.chunks(BLOCK) {
        let block_records: Vec<Vec<VerificationRecord>> = pool.install(|| {
            use rayon::prelude::*;
            block.par_iter().map(|&p| prime_records(cfg, p)).collect()
        });
        let mut saw_failure = false;
        for recs in &block_records {
            for rec in recs {
                summary.absorb(rec);
                write_record(out, rec, format)?;
                saw_failure |= rec.outcome() == Outcome::Fail;
            }
        }
        if cfg.fail_fast && saw_failure {
            break 'blocks;
        }
    }
    out.flush()?;
    summary.elapsed = start.elapsed();
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(statements: Vec<StatementId>, pmin: u32, pmax: u32) -> CampaignConfig {
        let mut c = CampaignConfig {
            statements,
            pmin,
            pmax,
            x_args: Vec::new(),
            threads: 2,
            fail_fast: false,
        };
        c.normalize();
        c
    }

    #[test]
    fn main2_range_counts() {
        let c = cfg(vec![StatementId::Main2], 5, 97);
        let mut buf = Vec::new();
        let summary = run_campaign(&c, OutputFormat::Jsonl, &mut buf).unwrap();
        let counts = summary.counts[&StatementId::Main2];
        // 23 primes in [5, 97], all in domain
        assert_eq!(counts.checked, 23);
        assert_eq!(counts.failed, 0);
        assert_eq!(counts.out_of_domain, 0);
        assert_eq!(buf.iter().filter(|&&b| b == b'\n').count(), 23);
    }

    #[test]
    fn main3_literal_counterexamples() {
        let c = cfg(vec![StatementId::Main3Literal], 3, 11);
        let mut buf = Vec::new();
        let summary = run_campaign(&c, OutputFormat::Csv, &mut buf).unwrap();
        let counts = summary.counts[&StatementId::Main3Literal];
        assert_eq!(counts.checked, 4); // p = 3, 5, 7, 11
        assert_eq!(counts.failed, 3); // p = 3, 7, 11
        assert_eq!(summary.first_failure[&StatementId::Main3Literal].p, 3);
    }

    #[test]
    fn empty_range_checks_nothing() {
        let c = cfg(vec![StatementId::Main1], 24, 28);
        let mut buf = Vec::new();
        let summary = run_campaign(&c, OutputFormat::Human, &mut buf).unwrap();
        assert_eq!(summary.total_checked(), 0);
        assert!(buf.is_empty());
    }

    #[test]
    fn output_is_identical_across_thread_counts() {
        let mut outputs = Vec::new();
        for threads in [1usize, 4, 8] {
            let mut c = cfg(
                vec![StatementId::SunAlternating, StatementId::Main1, StatementId::DsquareX],
                3,
                120,
            );
            c.threads = threads;
            let mut buf = Vec::new();
            run_campaign(&c, OutputFormat::Jsonl, &mut buf).unwrap();
            outputs.push(buf);
        }
        assert_eq!(outputs[0], outputs[1]);
        assert_eq!(outputs[0], outputs[2]);
    }

    #[test]
    fn fail_fast_stops_after_failing_block() {
        // a range long enough for several blocks would be slow; with one
        // block the contract degenerates to flushing everything
        let mut c = cfg(vec![StatementId::Main3Literal], 3, 50);
        c.fail_fast = true;
        let mut buf = Vec::new();
        let summary = run_campaign(&c, OutputFormat::Jsonl, &mut buf).unwrap();
        assert!(summary.total_failed() > 0);
        assert_eq!(summary.total_checked(), 14); // all 14 primes in [3, 50] flushed
    }

    #[test]
    fn counts_always_balance() {
        let c = cfg(StatementId::ALL.to_vec(), 2, 60);
        let mut buf = Vec::new();
        let summary = run_campaign(&c, OutputFormat::Human, &mut buf).unwrap();
        for (_, c) in &summary.counts {
            assert_eq!(c.checked, c.ok + c.failed + c.out_of_domain);
        }
    }
}
