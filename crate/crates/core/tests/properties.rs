use des::cipher::generic_array::GenericArray;
use des::cipher::{BlockDecrypt, BlockEncrypt, KeyInit};
use proptest::prelude::*;

use tdes_engine::des::{decrypt_block, encrypt_block, fused, key_schedule};
use tdes_engine::tdes::{tdes_decrypt_block, tdes_encrypt_block, triple_schedule};
use tdes_engine::{Block, DesKey, TripleKey};

fn des_crate_encrypt(key: u64, pt: u64) -> u64 {
    let c = des::Des::new_from_slice(&key.to_be_bytes()).unwrap();
    let mut b = GenericArray::clone_from_slice(&pt.to_be_bytes());
    c.encrypt_block(&mut b);
    u64::from_be_bytes(b.into())
}

fn tdes_crate(key: &TripleKey, pt: u64, encrypt: bool) -> u64 {
    let c = des::TdesEde3::new_from_slice(&{
        let mut k = [0u8; 24];
        k[..8].copy_from_slice(&key.k1.to_bytes());
        k[8..16].copy_from_slice(&key.k2.to_bytes());
        k[16..].copy_from_slice(&key.k3.to_bytes());
        k
    })
    .unwrap();
    let mut b = GenericArray::clone_from_slice(&pt.to_be_bytes());
    if encrypt {
        c.encrypt_block(&mut b);
    } else {
        c.decrypt_block(&mut b);
    }
    u64::from_be_bytes(b.into())
}

fn any_triple_key() -> impl Strategy<Value = TripleKey> {
    (any::<u64>(), any::<u64>(), any::<u64>(), 0..3u8).prop_map(|(a, b, c, opt)| match opt {
        0 => TripleKey::option1(DesKey::new(a), DesKey::new(b), DesKey::new(c)),
        1 => TripleKey::option2(DesKey::new(a), DesKey::new(b)),
        _ => TripleKey::option3(DesKey::new(a)),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn des_round_trip(key in any::<u64>(), pt in any::<u64>()) {
        let ks = key_schedule(DesKey::new(key));
        prop_assert_eq!(decrypt_block(encrypt_block(Block(pt), &ks), &ks), Block(pt));
    }

    #[test]
    fn des_matches_des_crate(key in any::<u64>(), pt in any::<u64>()) {
        let ks = key_schedule(DesKey::new(key));
        prop_assert_eq!(encrypt_block(Block(pt), &ks).0, des_crate_encrypt(key, pt));
    }

    #[test]
    fn fused_kernel_matches_reference(key in any::<u64>(), pt in any::<u64>()) {
        let ks = key_schedule(DesKey::new(key));
        let pass = fused::fuse_pass(&ks);
        prop_assert_eq!(fused::encrypt_block(Block(pt), &pass), encrypt_block(Block(pt), &ks));
        prop_assert_eq!(fused::decrypt_block(Block(pt), &pass), decrypt_block(Block(pt), &ks));
    }

    #[test]
    fn complementation(key in any::<u64>(), pt in any::<u64>()) {
        let ct = encrypt_block(Block(pt), &key_schedule(DesKey::new(key)));
        let ct_not = encrypt_block(Block(!pt), &key_schedule(DesKey::new(!key)));
        prop_assert_eq!(ct_not.0, !ct.0);
    }

    #[test]
    fn tdes_round_trip_and_crate_agreement(key in any_triple_key(), pt in any::<u64>()) {
        let ts = triple_schedule(&key);
        let ct = tdes_encrypt_block(Block(pt), &ts);
        prop_assert_eq!(tdes_decrypt_block(ct, &ts), Block(pt));
        prop_assert_eq!(ts.encrypt_fused(Block(pt)), ct);
        prop_assert_eq!(ts.decrypt_fused(ct), Block(pt));
        prop_assert_eq!(ct.0, tdes_crate(&key, pt, true));
        prop_assert_eq!(tdes_crate(&key, ct.0, false), pt);
    }

    #[test]
    fn single_key_triple_des_is_des(key in any::<u64>(), pt in any::<u64>()) {
        let ts = triple_schedule(&TripleKey::option3(DesKey::new(key)));
        let ks = key_schedule(DesKey::new(key));
        prop_assert_eq!(tdes_encrypt_block(Block(pt), &ts), encrypt_block(Block(pt), &ks));
    }

    #[test]
    fn parity_bits_are_ignored(key in any::<u64>(), flips in any::<u8>(), pt in any::<u64>()) {
        let mask = (0..8).filter(|i| flips >> i & 1 == 1).fold(0u64, |m, i| m | 1 << (8 * i));
        let a = encrypt_block(Block(pt), &key_schedule(DesKey::new(key)));
        let b = encrypt_block(Block(pt), &key_schedule(DesKey::new(key ^ mask)));
        prop_assert_eq!(a, b);
    }
}

#[test]
fn weak_keys_are_involutions() {
    for &k in &tdes_engine::des::WEAK_KEYS {
        let ks = key_schedule(DesKey::new(k));
        assert!(DesKey::new(k).is_weak());
        for pt in [0u64, 0x0123_4567_89AB_CDEF, u64::MAX, 0xDEAD_BEEF_0BAD_F00D] {
            assert_eq!(encrypt_block(encrypt_block(Block(pt), &ks), &ks), Block(pt));
        }
    }
}

#[test]
fn semi_weak_pairs_undo_each_other() {
    for pair in tdes_engine::des::SEMI_WEAK_KEYS.chunks(2) {
        let a = key_schedule(DesKey::new(pair[0]));
        let b = key_schedule(DesKey::new(pair[1]));
        let pt = Block(0x0123_4567_89AB_CDEF);
        assert_eq!(encrypt_block(encrypt_block(pt, &a), &b), pt);
    }
}
