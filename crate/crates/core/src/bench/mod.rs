//! Benchmark harness for the three experiment families: work-group sweep,
//! chunk-size sweep and worker scaling.
//!
//! Each measured run stages the payload into a block buffer (I/O), runs the
//! engine on it (compute) and reads the result back (I/O). Payload
//! generation, warm-up, oracle checks and report writing are never timed.

mod report;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::des::Block;
use crate::ecb::{decode_blocks, encode_blocks, Backend, Direction, DispatchConfig, Engine};
use crate::error::{Error, Result};
use crate::tdes::{tdes_encrypt_block, triple_schedule, TripleKey, TripleSchedule};

pub use report::{emit_report, parse_csv, speedup_table, Baseline, ReportFormat};

/// Fixed key used by every benchmark run.
pub const BENCH_KEY: &str = "0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123";
pub const DEFAULT_SEED: u64 = 0x3DE5_0ECB;
pub const DEFAULT_PAYLOAD_BYTES: usize = 64 << 20;
pub const DEFAULT_REPETITIONS: usize = 3;
/// Blocks at the start of every output checked against the scalar reference.
pub const DEFAULT_VERIFY_BLOCKS: usize = 4096;

/// Deterministic pseudo-random payload.
pub fn payload(seed: u64, bytes: usize) -> Vec<u8> {
    let mut data = vec![0u8; bytes];
    ChaCha8Rng::seed_from_u64(seed).fill_bytes(&mut data);
    data
}

pub fn bench_schedule() -> TripleSchedule {
    triple_schedule(&TripleKey::from_hex(BENCH_KEY).expect("benchmark key is valid"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepVariable {
    WorkGroup,
    ChunkBlocks,
    Workers,
}

impl SweepVariable {
    pub fn apply(self, cfg: DispatchConfig, value: usize) -> DispatchConfig {
        match self {
            SweepVariable::WorkGroup => cfg.with_work_group(value),
            SweepVariable::ChunkBlocks => cfg.with_chunk_blocks(value),
            SweepVariable::Workers => cfg.with_workers(value),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::WorkGroup => "work-group",
            SweepVariable::ChunkBlocks => "chunk-blocks",
            SweepVariable::Workers => "workers",
        }
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepVariable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "work-group" => Ok(SweepVariable::WorkGroup),
            "chunk-blocks" => Ok(SweepVariable::ChunkBlocks),
            "workers" => Ok(SweepVariable::Workers),
            other => Err(Error::Config(format!("unknown sweep variable '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    /// Strictly increasing.
    pub values: Vec<usize>,
    pub fixed: DispatchConfig,
    /// Multiple of 8.
    pub payload_bytes: usize,
    pub repetitions: usize,
    pub seed: u64,
    pub verify_blocks: usize,
}

impl SweepSpec {
    pub fn new(variable: SweepVariable, values: Vec<usize>, fixed: DispatchConfig) -> Self {
        SweepSpec {
            variable,
            values,
            fixed,
            payload_bytes: DEFAULT_PAYLOAD_BYTES,
            repetitions: DEFAULT_REPETITIONS,
            seed: DEFAULT_SEED,
            verify_blocks: DEFAULT_VERIFY_BLOCKS,
        }
    }

    /// Block-size sweep 8..512 at the default chunk size.
    pub fn work_group_sweep(fixed: DispatchConfig) -> Self {
        SweepSpec::new(
            SweepVariable::WorkGroup,
            vec![8, 16, 32, 64, 128, 256, 512],
            fixed,
        )
    }

    /// Blocks-per-dispatch sweep from 128 up to 8 Mi blocks.
    pub fn chunk_sweep(fixed: DispatchConfig) -> Self {
        SweepSpec::new(
            SweepVariable::ChunkBlocks,
            vec![
                128, 256, 512, 1024, 2048, 4096, 16_384, 32_768, 65_536, 131_072, 8_388_608,
            ],
            fixed,
        )
    }

    /// Worker scaling 1, 2, 4, 8.
    pub fn worker_sweep(fixed: DispatchConfig) -> Self {
        SweepSpec::new(SweepVariable::Workers, vec![1, 2, 4, 8], fixed)
    }

    pub fn with_payload_bytes(mut self, bytes: usize) -> Self {
        self.payload_bytes = bytes;
        self
    }

    pub fn with_repetitions(mut self, repetitions: usize) -> Self {
        self.repetitions = repetitions;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.values.is_empty() {
            return Err(Error::Config("sweep needs at least one value".into()));
        }
        if self.values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config(
                "sweep values must be strictly increasing".into(),
            ));
        }
        if self.repetitions == 0 {
            return Err(Error::Config("repetitions must be at least 1".into()));
        }
        if !self.payload_bytes.is_multiple_of(8) {
            return Err(Error::Config("payload size must be a multiple of 8".into()));
        }
        for &v in &self.values {
            self.variable.apply(self.fixed, v).validate()?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordStatus {
    Ok,
    Failed,
}

/// One sweep point. Column order in CSV output follows field order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub backend: Backend,
    pub workers: usize,
    pub chunk_blocks: usize,
    pub work_group: usize,
    pub payload_bytes: u64,
    /// Minimum over repetitions.
    pub compute_seconds: f64,
    /// Staging and read-back time of the fastest repetition.
    pub io_seconds: f64,
    /// `payload_bytes / compute_seconds / 2^20`.
    pub throughput_mb_s: f64,
    pub speedup_vs_baseline: f64,
    pub status: RecordStatus,
    /// Every timed repetition, in seconds.
    #[serde(with = "report::seconds_list")]
    pub compute_runs: Vec<f64>,
}

impl BenchRecord {
    fn new(cfg: &DispatchConfig, payload_bytes: u64) -> Self {
        BenchRecord {
            backend: cfg.backend,
            workers: cfg.workers,
            chunk_blocks: cfg.chunk_blocks,
            work_group: cfg.work_group,
            payload_bytes,
            compute_seconds: 0.0,
            io_seconds: 0.0,
            throughput_mb_s: 0.0,
            speedup_vs_baseline: 0.0,
            status: RecordStatus::Failed,
            compute_runs: Vec::new(),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == RecordStatus::Ok
    }
}

pub fn throughput_mb_s(payload_bytes: u64, compute_seconds: f64) -> f64 {
    if compute_seconds > 0.0 {
        payload_bytes as f64 / compute_seconds / (1u64 << 20) as f64
    } else {
        0.0
    }
}

/// Something that encrypts a block buffer in place; the timed region.
pub trait Runner {
    fn run(&mut self, ts: &TripleSchedule, blocks: &mut [Block]);
}

impl Runner for Engine {
    fn run(&mut self, ts: &TripleSchedule, blocks: &mut [Block]) {
        self.apply(ts, Direction::Encrypt, blocks);
    }
}

/// Runs the sweep on [`Engine`]s built from each configuration.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<BenchRecord>> {
    run_sweep_with(spec, |cfg| Engine::new(*cfg))
}

/// Runs the sweep with runners built by `make`. A runner that cannot be
/// built, or whose output disagrees with the scalar reference, yields a
/// record marked [`RecordStatus::Failed`] and the sweep moves on.
pub fn run_sweep_with<R, F>(spec: &SweepSpec, mut make: F) -> Result<Vec<BenchRecord>>
where
    R: Runner,
    F: FnMut(&DispatchConfig) -> Result<R>,
{
    spec.validate()?;
    let ts = bench_schedule();
    let data = payload(spec.seed, spec.payload_bytes);
    let n_blocks = data.len() / 8;
    let mut plaintext = vec![Block::default(); n_blocks];
    decode_blocks(&data, &mut plaintext);

    // Positions checked after every run: a prefix plus the final block.
    let mut checked: Vec<usize> = (0..spec.verify_blocks.min(n_blocks)).collect();
    if n_blocks > checked.len() {
        checked.push(n_blocks - 1);
    }
    let reference: Vec<Block> = checked
        .iter()
        .map(|&i| tdes_encrypt_block(plaintext[i], &ts))
        .collect();
    let identity: Vec<Block> = checked.iter().map(|&i| plaintext[i]).collect();

    let mut work = vec![Block::default(); n_blocks];
    let mut readback = vec![0u8; data.len()];
    let mut records = Vec::with_capacity(spec.values.len());

    for &value in &spec.values {
        let cfg = spec.variable.apply(spec.fixed, value);
        let mut record = BenchRecord::new(&cfg, data.len() as u64);
        // The no-op backend's oracle is the identity.
        let expected = match cfg.backend {
            Backend::Noop => &identity,
            _ => &reference,
        };
        let verified = |out: &[Block]| checked.iter().zip(expected).all(|(&i, &b)| out[i] == b);
        let Ok(mut runner) = make(&cfg) else {
            records.push(record);
            continue;
        };

        work.copy_from_slice(&plaintext);
        runner.run(&ts, &mut work);

        let mut best: Option<(Duration, Duration)> = None;
        let mut ok = verified(&work);
        for _ in 0..spec.repetitions {
            if !ok {
                break;
            }
            let t = Instant::now();
            decode_blocks(&data, &mut work);
            let stage = t.elapsed();

            let t = Instant::now();
            runner.run(&ts, &mut work);
            let compute = t.elapsed();

            let t = Instant::now();
            encode_blocks(&work, &mut readback);
            let io = stage + t.elapsed();

            ok = verified(&work);
            record.compute_runs.push(compute.as_secs_f64());
            if best.is_none_or(|(c, _)| compute < c) {
                best = Some((compute, io));
            }
        }

        if let (true, Some((compute, io))) = (ok, best) {
            record.status = RecordStatus::Ok;
            record.compute_seconds = compute.as_secs_f64();
            record.io_seconds = io.as_secs_f64();
            record.throughput_mb_s = throughput_mb_s(record.payload_bytes, record.compute_seconds);
        } else {
            record.compute_runs.clear();
        }
        records.push(record);
    }

    let baseline = records
        .iter()
        .find(|r| r.is_ok())
        .map(|r| r.compute_seconds);
    for r in records.iter_mut().filter(|r| r.is_ok()) {
        r.speedup_vs_baseline = match baseline {
            Some(b) if r.compute_seconds > 0.0 => b / r.compute_seconds,
            _ => 0.0,
        };
    }
    Ok(records)
}
