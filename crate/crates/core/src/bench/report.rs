use std::fmt::Write as _;
use std::str::FromStr;

use super::BenchRecord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::Config(format!("unknown report format '{other}'"))),
        }
    }
}

/// Which record the speedup column is relative to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Baseline {
    /// The first record.
    First,
    /// The first successful record with this many workers.
    Workers(usize),
    /// The record at this index.
    Row(usize),
}

fn find_baseline(records: &[BenchRecord], baseline: Baseline) -> Option<&BenchRecord> {
    match baseline {
        Baseline::First => records.first(),
        Baseline::Workers(n) => records.iter().find(|r| r.workers == n && r.is_ok()),
        Baseline::Row(i) => records.get(i),
    }
    .filter(|r| r.is_ok() && r.compute_seconds > 0.0)
}

/// Time and speedup per record, relative to the chosen baseline.
pub fn speedup_table(records: &[BenchRecord], baseline: Baseline) -> Result<String> {
    let base = find_baseline(records, baseline)
        .ok_or_else(|| Error::Config(format!("baseline {baseline:?} not present in records")))?
        .compute_seconds;
    let mut out = String::new();
    out.push_str("| Backend | Workers | Chunk blocks | Work group | Speedup | Time (s) |\n");
    out.push_str("|---|---:|---:|---:|---:|---:|\n");
    for r in records {
        let speedup = if r.is_ok() && r.compute_seconds > 0.0 {
            format!("{:.2}", base / r.compute_seconds)
        } else {
            "-".to_string()
        };
        let time = if r.is_ok() {
            format!("{:.2}", r.compute_seconds)
        } else {
            "failed".to_string()
        };
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} |",
            r.backend, r.workers, r.chunk_blocks, r.work_group, speedup, time
        )
        .unwrap();
    }
    Ok(out)
}

const COLUMNS: [&str; 11] = [
    "backend",
    "workers",
    "chunk_blocks",
    "work_group",
    "payload_bytes",
    "compute_seconds",
    "io_seconds",
    "throughput_mb_s",
    "speedup_vs_baseline",
    "status",
    "compute_runs",
];

pub fn emit_report(records: &[BenchRecord], format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Csv => emit_csv(records),
        ReportFormat::Markdown => Ok(emit_markdown(records).into_bytes()),
    }
}

fn emit_csv(records: &[BenchRecord]) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    // Written explicitly so an empty record set still gets a header.
    w.write_record(COLUMNS)?;
    for r in records {
        w.serialize(r)?;
    }
    w.into_inner()
        .map_err(|e| Error::Report(csv::Error::from(e.into_error())))
}

pub fn parse_csv(bytes: &[u8]) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::Reader::from_reader(bytes);
    let header = rdr.headers()?.clone();
    if header.iter().ne(COLUMNS) {
        return Err(Error::Config(format!("unexpected CSV header: {header:?}")));
    }
    rdr.deserialize().map(|r| r.map_err(Error::from)).collect()
}

fn emit_markdown(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    out.push_str("| Backend | Workers | Chunk blocks | Work group | Payload (B) | Compute (s) | I/O (s) | MB/s | Speedup | Status |\n");
    out.push_str("|---|---:|---:|---:|---:|---:|---:|---:|---:|---|\n");
    for r in records {
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {:.4} | {:.4} | {:.1} | {:.2} | {} |",
            r.backend,
            r.workers,
            r.chunk_blocks,
            r.work_group,
            r.payload_bytes,
            r.compute_seconds,
            r.io_seconds,
            r.throughput_mb_s,
            r.speedup_vs_baseline,
            if r.is_ok() { "ok" } else { "failed" },
        )
        .unwrap();
    }
    out
}

/// Serializes a list of seconds as one `;`-separated field.
pub(super) mod seconds_list {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(runs: &[f64], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<String> = runs.iter().map(|r| r.to_string()).collect();
        s.serialize_str(&text.join(";"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        let text = String::deserialize(d)?;
        if text.is_empty() {
            return Ok(Vec::new());
        }
        text.split(';')
            .map(|v| v.parse::<f64>().map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::RecordStatus;
    use super::*;
    use crate::ecb::Backend;
    use proptest::prelude::*;

    fn record(workers: usize, seconds: f64) -> BenchRecord {
        BenchRecord {
            backend: Backend::Threaded,
            workers,
            chunk_blocks: 131_072,
            work_group: 256,
            payload_bytes: 512 << 20,
            compute_seconds: seconds,
            io_seconds: 0.5,
            throughput_mb_s: 512.0 / seconds,
            speedup_vs_baseline: 1.0,
            status: RecordStatus::Ok,
            compute_runs: vec![seconds, seconds + 0.25],
        }
    }

    fn speedups(table: &str) -> Vec<String> {
        table
            .lines()
            .skip(2)
            .map(|l| l.split('|').nth(5).unwrap().trim().to_string())
            .collect()
    }

    #[test]
    fn single_row_has_unit_speedup() {
        let t = speedup_table(&[record(1, 3.0)], Baseline::First).unwrap();
        assert_eq!(speedups(&t), ["1.00"]);
    }

    #[test]
    fn ratio_arithmetic() {
        let t = speedup_table(&[record(1, 100.0), record(2, 50.0)], Baseline::First).unwrap();
        assert_eq!(speedups(&t), ["1.00", "2.00"]);
    }

    #[test]
    fn scaling_rows_shaped_like_a_quad_core_cpu() {
        let rows = [record(1, 2177.23), record(2, 1093.86), record(4, 544.43)];
        let t = speedup_table(&rows, Baseline::Workers(1)).unwrap();
        assert_eq!(speedups(&t), ["1.00", "1.99", "4.00"]);
        assert!(t.contains("| 2177.23 |"));
    }

    #[test]
    fn missing_baseline_is_a_configuration_error() {
        let rows = [record(2, 1.0)];
        assert!(matches!(
            speedup_table(&rows, Baseline::Workers(1)),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            speedup_table(&[], Baseline::First),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            speedup_table(&rows, Baseline::Row(3)),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn empty_csv_is_header_only() {
        let bytes = emit_report(&[], ReportFormat::Csv).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert_eq!(text.trim_end(), COLUMNS.join(","));
        assert!(parse_csv(text.as_bytes()).unwrap().is_empty());
    }

    #[test]
    fn one_record_is_two_lines() {
        let r = record(4, 0.123);
        let bytes = emit_report(std::slice::from_ref(&r), ReportFormat::Csv).unwrap();
        assert_eq!(String::from_utf8_lossy(&bytes).lines().count(), 2);
        assert_eq!(parse_csv(&bytes).unwrap(), vec![r]);
    }

    #[test]
    fn unknown_format_is_rejected() {
        assert!("xml".parse::<ReportFormat>().is_err());
        assert_eq!(
            "md".parse::<ReportFormat>().unwrap(),
            ReportFormat::Markdown
        );
    }

    #[test]
    fn markdown_has_a_row_per_record() {
        let bytes = emit_report(&[record(1, 1.0), record(2, 0.5)], ReportFormat::Markdown).unwrap();
        assert_eq!(String::from_utf8(bytes).unwrap().lines().count(), 4);
    }

    fn arb_record() -> impl Strategy<Value = BenchRecord> {
        (
            prop_oneof![
                Just(Backend::ScalarReference),
                Just(Backend::Threaded),
                Just(Backend::Noop)
            ],
            (1usize..1024, 1usize..1 << 24, 1usize..4096, any::<u64>()),
            (0.0f64..1e6, 0.0f64..1e6, 0.0f64..1e9, 0.0f64..1e3),
            any::<bool>(),
            prop::collection::vec(0.0f64..1e6, 0..6),
        )
            .prop_map(
                |(backend, (w, c, g, p), (cs, io, tp, sp), ok, runs)| BenchRecord {
                    backend,
                    workers: w,
                    chunk_blocks: c,
                    work_group: g,
                    payload_bytes: p,
                    compute_seconds: cs,
                    io_seconds: io,
                    throughput_mb_s: tp,
                    speedup_vs_baseline: sp,
                    status: if ok {
                        RecordStatus::Ok
                    } else {
                        RecordStatus::Failed
                    },
                    compute_runs: runs,
                },
            )
    }

    proptest! {
        #[test]
        fn csv_round_trip(records in prop::collection::vec(arb_record(), 0..8)) {
            let bytes = emit_report(&records, ReportFormat::Csv).unwrap();
            prop_assert_eq!(parse_csv(&bytes).unwrap(), records);
        }
    }
}
