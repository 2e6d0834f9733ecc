use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::des::Block;
use crate::error::{Error, Result};
use crate::tdes::{tdes_decrypt_block, tdes_encrypt_block, TripleSchedule};

/// Blocks per dispatch when nothing else is configured (1 MiB of data).
pub const DEFAULT_CHUNK_BLOCKS: usize = 131_072;
/// Blocks per work group when nothing else is configured.
pub const DEFAULT_WORK_GROUP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Encrypt,
    Decrypt,
}

/// Where block transforms run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    /// Sequential, computing from the plain DES tables. The correctness oracle.
    ScalarReference,
    /// Fused-table kernel on a pool of worker threads.
    Threaded,
    /// Leaves blocks untouched. Measures everything except the cipher.
    Noop,
}

impl Backend {
    pub const fn name(self) -> &'static str {
        match self {
            Backend::ScalarReference => "scalar-reference",
            Backend::Threaded => "threaded",
            Backend::Noop => "noop",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scalar-reference" | "scalar" | "reference" => Ok(Backend::ScalarReference),
            "threaded" => Ok(Backend::Threaded),
            "noop" => Ok(Backend::Noop),
            other => Err(Error::Config(format!("unknown backend '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DispatchConfig {
    /// Blocks handed to the backend per dispatch.
    pub chunk_blocks: usize,
    /// Consecutive blocks making up one task for a worker.
    pub work_group: usize,
    /// Worker threads for [`Backend::Threaded`].
    pub workers: usize,
    pub backend: Backend,
}

impl Default for DispatchConfig {
    fn default() -> Self {
        DispatchConfig {
            chunk_blocks: DEFAULT_CHUNK_BLOCKS,
            work_group: DEFAULT_WORK_GROUP,
            workers: available_workers(),
            backend: Backend::Threaded,
        }
    }
}

/// Hardware threads available to this process (at least 1).
pub fn available_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

impl DispatchConfig {
    pub fn scalar() -> Self {
        DispatchConfig {
            backend: Backend::ScalarReference,
            workers: 1,
            ..Default::default()
        }
    }

    pub fn threaded(workers: usize) -> Self {
        DispatchConfig {
            workers,
            ..Default::default()
        }
    }

    pub fn with_chunk_blocks(mut self, chunk_blocks: usize) -> Self {
        self.chunk_blocks = chunk_blocks;
        self
    }

    pub fn with_work_group(mut self, work_group: usize) -> Self {
        self.work_group = work_group;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_backend(mut self, backend: Backend) -> Self {
        self.backend = backend;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("chunk_blocks", self.chunk_blocks),
            ("work_group", self.work_group),
            ("workers", self.workers),
        ] {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }

    /// Work groups needed for a full chunk.
    pub fn group_count(&self) -> usize {
        groups_for(self.chunk_blocks, self.work_group)
    }
}

pub fn groups_for(n: usize, group: usize) -> usize {
    n.div_ceil(group)
}

/// A contiguous run of blocks submitted as one dispatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub offset: usize,
    pub len: usize,
}

impl Span {
    pub fn range(&self) -> Range<usize> {
        self.offset..self.offset + self.len
    }
}

/// Splits `total_blocks` into dispatch spans of `chunk_blocks`.
///
/// Spans are contiguous, disjoint and cover exactly `0..total_blocks`; only
/// the last one may be short.
pub fn plan_dispatch(total_blocks: usize, cfg: &DispatchConfig) -> Vec<Span> {
    let chunk = cfg.chunk_blocks.max(1);
    (0..total_blocks)
        .step_by(chunk)
        .map(|offset| Span {
            offset,
            len: chunk.min(total_blocks - offset),
        })
        .collect()
}

/// Runs dispatches for one configuration. Owns the worker pool.
///
/// Use from one submitting thread at a time.
pub struct Engine {
    cfg: DispatchConfig,
    pool: Option<ThreadPool>,
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Engine").field("cfg", &self.cfg).finish()
    }
}

impl Engine {
    pub fn new(cfg: DispatchConfig) -> Result<Self> {
        cfg.validate()?;
        let pool = match cfg.backend {
            Backend::Threaded => Some(
                ThreadPoolBuilder::new()
                    .num_threads(cfg.workers)
                    .thread_name(|i| format!("tdes-worker-{i}"))
                    .build()
                    .map_err(|e| Error::Config(format!("worker pool: {e}")))?,
            ),
            Backend::ScalarReference | Backend::Noop => None,
        };
        Ok(Engine { cfg, pool })
    }

    pub fn config(&self) -> &DispatchConfig {
        &self.cfg
    }

    /// Transforms `blocks` in place, one dispatch per planned span.
    /// Returns the number of dispatches.
    pub fn apply(&self, ts: &TripleSchedule, direction: Direction, blocks: &mut [Block]) -> usize {
        let spans = plan_dispatch(blocks.len(), &self.cfg);
        for span in &spans {
            self.dispatch(ts, direction, &mut blocks[span.range()]);
        }
        spans.len()
    }

    fn dispatch(&self, ts: &TripleSchedule, direction: Direction, chunk: &mut [Block]) {
        let wg = self.cfg.work_group;
        match (self.cfg.backend, &self.pool) {
            (Backend::Threaded, Some(pool)) => pool.scope(|s| {
                for group in chunk.chunks_mut(wg) {
                    s.spawn(move |_| fused_group(ts, direction, group));
                }
            }),
            (Backend::ScalarReference, _) => {
                for group in chunk.chunks_mut(wg) {
                    reference_group(ts, direction, group);
                }
            }
            (Backend::Noop, _) => {}
            (Backend::Threaded, None) => unreachable!("threaded engine without a pool"),
        }
    }

    /// Out-of-place encryption of `input` into `output` (equal lengths).
    pub fn encrypt_into(
        &self,
        ts: &TripleSchedule,
        input: &[Block],
        output: &mut [Block],
    ) -> usize {
        output.copy_from_slice(input);
        self.apply(ts, Direction::Encrypt, output)
    }

    pub fn decrypt_into(
        &self,
        ts: &TripleSchedule,
        input: &[Block],
        output: &mut [Block],
    ) -> usize {
        output.copy_from_slice(input);
        self.apply(ts, Direction::Decrypt, output)
    }

    pub fn encrypt_batch(&self, batch: &Batch, ts: &TripleSchedule) -> Batch {
        self.transform_batch(batch, ts, Direction::Encrypt)
    }

    pub fn decrypt_batch(&self, batch: &Batch, ts: &TripleSchedule) -> Batch {
        self.transform_batch(batch, ts, Direction::Decrypt)
    }

    fn transform_batch(&self, batch: &Batch, ts: &TripleSchedule, direction: Direction) -> Batch {
        let mut out = batch.clone();
        self.apply(ts, direction, &mut out.blocks);
        out
    }
}

/// One-shot encryption with a temporary engine.
pub fn encrypt_batch(batch: &Batch, ts: &TripleSchedule, cfg: &DispatchConfig) -> Result<Batch> {
    Ok(Engine::new(*cfg)?.encrypt_batch(batch, ts))
}

/// One-shot decryption with a temporary engine.
pub fn decrypt_batch(batch: &Batch, ts: &TripleSchedule, cfg: &DispatchConfig) -> Result<Batch> {
    Ok(Engine::new(*cfg)?.decrypt_batch(batch, ts))
}

fn reference_group(ts: &TripleSchedule, direction: Direction, group: &mut [Block]) {
    match direction {
        Direction::Encrypt => group
            .iter_mut()
            .for_each(|b| *b = tdes_encrypt_block(*b, ts)),
        Direction::Decrypt => group
            .iter_mut()
            .for_each(|b| *b = tdes_decrypt_block(*b, ts)),
    }
}

fn fused_group(ts: &TripleSchedule, direction: Direction, group: &mut [Block]) {
    match direction {
        Direction::Encrypt => group.iter_mut().for_each(|b| *b = ts.encrypt_fused(*b)),
        Direction::Decrypt => group.iter_mut().for_each(|b| *b = ts.decrypt_fused(*b)),
    }
}

/// A run of blocks and where it starts in its source stream.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Batch {
    pub blocks: Vec<Block>,
    pub origin_offset: u64,
}

impl Batch {
    pub fn new(blocks: Vec<Block>) -> Self {
        Batch {
            blocks,
            origin_offset: 0,
        }
    }

    /// Loads big-endian blocks. Fails unless `bytes.len()` is a multiple of 8.
    pub fn from_bytes(bytes: &[u8], origin_offset: u64) -> Result<Self> {
        if !bytes.len().is_multiple_of(8) {
            return Err(Error::InputLength(bytes.len() as u64));
        }
        let mut blocks = vec![Block::default(); bytes.len() / 8];
        decode_blocks(bytes, &mut blocks);
        Ok(Batch {
            blocks,
            origin_offset,
        })
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.blocks.len() * 8];
        encode_blocks(&self.blocks, &mut out);
        out
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn byte_len(&self) -> usize {
        self.blocks.len() * 8
    }
}

/// `bytes.len()` must equal `8 * blocks.len()`.
pub fn decode_blocks(bytes: &[u8], blocks: &mut [Block]) {
    debug_assert_eq!(bytes.len(), blocks.len() * 8);
    for (b, chunk) in blocks.iter_mut().zip(bytes.chunks_exact(8)) {
        *b = Block::from_bytes(chunk.try_into().unwrap());
    }
}

/// `bytes.len()` must equal `8 * blocks.len()`.
pub fn encode_blocks(blocks: &[Block], bytes: &mut [u8]) {
    debug_assert_eq!(bytes.len(), blocks.len() * 8);
    for (b, chunk) in blocks.iter().zip(bytes.chunks_exact_mut(8)) {
        chunk.copy_from_slice(&b.to_bytes());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tdes::{triple_schedule, TripleKey};

    fn schedule() -> TripleSchedule {
        triple_schedule(
            &TripleKey::from_hex("0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123").unwrap(),
        )
    }

    fn cfg(chunk: usize) -> DispatchConfig {
        DispatchConfig::scalar().with_chunk_blocks(chunk)
    }

    #[test]
    fn single_chunk_at_default_size() {
        assert_eq!(
            plan_dispatch(131_072, &cfg(131_072)),
            vec![Span {
                offset: 0,
                len: 131_072
            }]
        );
    }

    #[test]
    fn empty_input_plans_nothing() {
        assert!(plan_dispatch(0, &cfg(16)).is_empty());
    }

    #[test]
    fn tail_chunk_is_short() {
        assert_eq!(
            plan_dispatch(300_000, &cfg(131_072)),
            vec![
                Span {
                    offset: 0,
                    len: 131_072
                },
                Span {
                    offset: 131_072,
                    len: 131_072
                },
                Span {
                    offset: 262_144,
                    len: 37_856
                },
            ]
        );
    }

    #[test]
    fn group_count_is_ceiling() {
        let c = DispatchConfig::default();
        assert_eq!(c.group_count(), 512);
        assert_eq!(groups_for(131_073, 256), 513);
        assert_eq!(groups_for(1, 256), 1);
        assert_eq!(groups_for(0, 256), 0);
    }

    #[test]
    fn zero_sizes_are_rejected() {
        for bad in [
            cfg(0),
            cfg(1).with_work_group(0),
            DispatchConfig::threaded(0),
        ] {
            assert!(matches!(Engine::new(bad), Err(Error::Config(_))));
        }
    }

    #[test]
    fn backend_names_round_trip() {
        for b in [Backend::ScalarReference, Backend::Threaded, Backend::Noop] {
            assert_eq!(b.name().parse::<Backend>().unwrap(), b);
        }
        assert!("gpu".parse::<Backend>().is_err());
    }

    #[test]
    fn singleton_batch_matches_block_function() {
        let ts = schedule();
        let x = Block(0x5468_6520_7175_6663);
        for backend in [Backend::ScalarReference, Backend::Threaded] {
            let engine = Engine::new(DispatchConfig::threaded(2).with_backend(backend)).unwrap();
            let out = engine.encrypt_batch(&Batch::new(vec![x]), &ts);
            assert_eq!(out.blocks, vec![tdes_encrypt_block(x, &ts)]);
            let back = engine.decrypt_batch(&out, &ts);
            assert_eq!(back.blocks, vec![x]);
        }
    }

    #[test]
    fn identical_plaintext_blocks_give_identical_ciphertext() {
        let ts = schedule();
        let engine = Engine::new(DispatchConfig::threaded(3).with_work_group(1)).unwrap();
        let out = engine.encrypt_batch(&Batch::new(vec![Block(7); 5]), &ts);
        assert!(out.blocks.iter().all(|&b| b == out.blocks[0]));
    }

    #[test]
    fn in_place_and_out_of_place_agree() {
        let ts = schedule();
        let engine = Engine::new(
            DispatchConfig::threaded(2)
                .with_chunk_blocks(10)
                .with_work_group(3),
        )
        .unwrap();
        let input: Vec<Block> = (0..37u64)
            .map(|i| Block(i.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
            .collect();
        let mut out = vec![Block::default(); input.len()];
        assert_eq!(engine.encrypt_into(&ts, &input, &mut out), 4);
        let mut in_place = input.clone();
        engine.apply(&ts, Direction::Encrypt, &mut in_place);
        assert_eq!(out, in_place);
        assert_eq!(engine.encrypt_batch(&Batch::new(input), &ts).blocks, out);
    }

    #[test]
    fn noop_backend_leaves_data_alone() {
        let ts = schedule();
        let engine = Engine::new(DispatchConfig::default().with_backend(Backend::Noop)).unwrap();
        let batch = Batch::new(vec![Block(1), Block(2)]);
        assert_eq!(engine.encrypt_batch(&batch, &ts), batch);
    }

    #[test]
    fn batch_byte_conversion() {
        let bytes: Vec<u8> = (0..16).collect();
        let batch = Batch::from_bytes(&bytes, 64).unwrap();
        assert_eq!(batch.blocks[0], Block(0x0001_0203_0405_0607));
        assert_eq!(batch.origin_offset, 64);
        assert_eq!(batch.to_bytes(), bytes);
        assert!(matches!(
            Batch::from_bytes(&bytes[..9], 0),
            Err(Error::InputLength(9))
        ));
    }
}
