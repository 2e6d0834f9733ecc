use proptest::prelude::*;

use tdes_engine::bench::{bench_schedule, payload};
use tdes_engine::ecb::{
    decrypt_batch, encrypt_batch, plan_dispatch, Backend, Batch, Direction, DispatchConfig, Engine,
};
use tdes_engine::tdes::tdes_encrypt_block;
use tdes_engine::{Block, Error};

#[test]
fn plan_covers_every_block_exactly_once() {
    for chunk in 1..64 {
        let cfg = DispatchConfig::scalar().with_chunk_blocks(chunk);
        for total in 0..10_000 {
            let spans = plan_dispatch(total, &cfg);
            assert_eq!(spans.len(), total.div_ceil(chunk));
            let mut next = 0;
            for (i, s) in spans.iter().enumerate() {
                assert_eq!(s.offset, next);
                assert!(s.len > 0);
                assert!(s.len == chunk || i == spans.len() - 1);
                next += s.len;
            }
            assert_eq!(next, total);
        }
    }
}

fn blocks(seed: u64, n: usize) -> Vec<Block> {
    payload(seed, n * 8)
        .chunks(8)
        .map(|c| Block::from_bytes(c.try_into().unwrap()))
        .collect()
}

#[test]
fn backends_agree_on_ragged_sizes() {
    let ts = bench_schedule();
    let input = blocks(7, 5_003);
    let reference = Engine::new(DispatchConfig::scalar()).unwrap();
    let mut expected = input.clone();
    reference.apply(&ts, Direction::Encrypt, &mut expected);
    for workers in [1, 2, 3, 8] {
        for (chunk, wg) in [(1, 1), (7, 3), (1000, 256), (131_072, 256), (64, 512)] {
            let cfg = DispatchConfig::threaded(workers)
                .with_chunk_blocks(chunk)
                .with_work_group(wg);
            let engine = Engine::new(cfg).unwrap();
            let mut out = input.clone();
            let n = engine.apply(&ts, Direction::Encrypt, &mut out);
            assert_eq!(n, input.len().div_ceil(chunk));
            assert_eq!(out, expected, "{cfg:?}");
            engine.apply(&ts, Direction::Decrypt, &mut out);
            assert_eq!(out, input, "{cfg:?}");
        }
    }
}

#[test]
fn empty_input_dispatches_nothing() {
    let ts = bench_schedule();
    let engine = Engine::new(DispatchConfig::threaded(2)).unwrap();
    assert_eq!(engine.apply(&ts, Direction::Encrypt, &mut []), 0);
}

#[test]
fn noop_leaves_blocks_alone() {
    let ts = bench_schedule();
    let engine = Engine::new(DispatchConfig::default().with_backend(Backend::Noop)).unwrap();
    let input = blocks(3, 100);
    let mut out = input.clone();
    engine.apply(&ts, Direction::Encrypt, &mut out);
    assert_eq!(out, input);
}

#[test]
fn invalid_configs_are_rejected() {
    for cfg in [
        DispatchConfig::threaded(0),
        DispatchConfig::threaded(2).with_chunk_blocks(0),
        DispatchConfig::threaded(2).with_work_group(0),
    ] {
        assert!(matches!(Engine::new(cfg), Err(Error::Config(_))), "{cfg:?}");
    }
}

#[test]
fn batch_bytes_must_be_whole_blocks() {
    assert!(matches!(
        Batch::from_bytes(&[0u8; 9], 0),
        Err(Error::InputLength(9))
    ));
    let b = Batch::from_bytes(&[0u8; 16], 32).unwrap();
    assert_eq!((b.len(), b.byte_len(), b.origin_offset), (2, 16, 32));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Each output block depends only on the input block at the same index.
    #[test]
    fn blocks_are_independent(
        data in prop::collection::vec(any::<u64>(), 1..600),
        idx in any::<prop::sample::Index>(),
        flip in any::<u64>(),
        chunk in 1usize..100,
        wg in 1usize..40,
    ) {
        let ts = bench_schedule();
        let cfg = DispatchConfig::threaded(3).with_chunk_blocks(chunk).with_work_group(wg);
        let a = Batch::new(data.iter().map(|&v| Block(v)).collect());
        let mut b = a.clone();
        let i = idx.index(data.len());
        b.blocks[i].0 ^= flip | 1;
        let ca = encrypt_batch(&a, &ts, &cfg).unwrap();
        let cb = encrypt_batch(&b, &ts, &cfg).unwrap();
        for j in 0..data.len() {
            prop_assert_eq!(ca.blocks[j] == cb.blocks[j], j != i);
            prop_assert_eq!(ca.blocks[j], tdes_encrypt_block(a.blocks[j], &ts));
        }
        prop_assert_eq!(decrypt_batch(&ca, &ts, &cfg).unwrap(), a);
    }
}
