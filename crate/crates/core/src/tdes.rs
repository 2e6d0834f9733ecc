//! Triple-DES in encrypt-decrypt-encrypt order.
//!
//! A [`TripleSchedule`] holds the 48 round keys (pass-major: 16 for k1, then
//! k2, then k3) computed once up front. Decryption walks the same keys
//! backwards instead of keeping a second schedule.

use std::fmt;
use std::str::FromStr;

use crate::des::fused::{self, FusedPass};
use crate::des::{self, key_schedule, Block, DesKey, RoundKeySet};
use crate::error::{Error, Result};

/// How many independent DES keys a [`TripleKey`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KeyingOption {
    /// Three keys (24 bytes).
    Option1,
    /// Two keys, k3 = k1 (16 bytes).
    Option2,
    /// One key used three times (8 bytes). Equivalent to single DES.
    Option3,
}

impl KeyingOption {
    pub fn key_bytes(self) -> usize {
        match self {
            KeyingOption::Option1 => 24,
            KeyingOption::Option2 => 16,
            KeyingOption::Option3 => 8,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleKey {
    pub k1: DesKey,
    pub k2: DesKey,
    pub k3: DesKey,
    pub option: KeyingOption,
}

impl TripleKey {
    pub fn option1(k1: DesKey, k2: DesKey, k3: DesKey) -> Self {
        TripleKey {
            k1,
            k2,
            k3,
            option: KeyingOption::Option1,
        }
    }

    pub fn option2(k1: DesKey, k2: DesKey) -> Self {
        TripleKey {
            k1,
            k2,
            k3: k1,
            option: KeyingOption::Option2,
        }
    }

    pub fn option3(k: DesKey) -> Self {
        TripleKey {
            k1: k,
            k2: k,
            k3: k,
            option: KeyingOption::Option3,
        }
    }

    /// Builds a key from 24, 16 or 8 raw bytes; the length selects the keying option.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let part = |i: usize| {
            let mut b = [0u8; 8];
            b.copy_from_slice(&bytes[8 * i..8 * i + 8]);
            DesKey::from_bytes(b)
        };
        match bytes.len() {
            24 => Ok(TripleKey::option1(part(0), part(1), part(2))),
            16 => Ok(TripleKey::option2(part(0), part(1))),
            8 => Ok(TripleKey::option3(part(0))),
            n => Err(Error::KeyLength(n)),
        }
    }

    /// Parses 48, 32 or 16 hex characters. Surrounding whitespace is ignored.
    pub fn from_hex(text: &str) -> Result<Self> {
        let text = text.trim();
        let bytes = hex::decode(text).map_err(|e| Error::InvalidHex(e.to_string()))?;
        TripleKey::from_bytes(&bytes)
    }

    /// Serialized form: 24, 16 or 8 bytes depending on the keying option.
    pub fn to_bytes(&self) -> Vec<u8> {
        let keys = [self.k1, self.k2, self.k3];
        let n = self.option.key_bytes() / 8;
        keys[..n].iter().flat_map(|k| k.to_bytes()).collect()
    }

    pub fn to_hex(&self) -> String {
        hex::encode_upper(self.to_bytes())
    }

    /// The distinct key components (1, 2 or 3 of them), 1-based index first.
    fn components(&self) -> impl Iterator<Item = (usize, DesKey)> {
        let keys = [self.k1, self.k2, self.k3];
        let n = self.option.key_bytes() / 8;
        keys.into_iter()
            .take(n)
            .enumerate()
            .map(|(i, k)| (i + 1, k))
    }

    /// Fails on the first component with a byte of even parity.
    pub fn check_parity(&self) -> Result<()> {
        for (key, k) in self.components() {
            if let Some(byte) = k.first_parity_error() {
                return Err(Error::Parity { key, byte });
            }
        }
        Ok(())
    }

    pub fn with_odd_parity(&self) -> Self {
        TripleKey {
            k1: self.k1.with_odd_parity(),
            k2: self.k2.with_odd_parity(),
            k3: self.k3.with_odd_parity(),
            option: self.option,
        }
    }

    /// 1-based indices of components that are weak or semi-weak DES keys.
    pub fn weak_components(&self) -> Vec<usize> {
        self.components()
            .filter(|(_, k)| k.is_weak() || k.is_semi_weak())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn check_weak(&self) -> Result<()> {
        match self.weak_components().first() {
            Some(&key) => Err(Error::WeakKey { key }),
            None => Ok(()),
        }
    }
}

impl FromStr for TripleKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TripleKey::from_hex(s)
    }
}

impl fmt::Debug for TripleKey {
    // Keys stay out of logs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripleKey")
            .field("option", &self.option)
            .finish_non_exhaustive()
    }
}

/// The 48 precomputed round keys of one Triple-DES key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSchedule {
    passes: [RoundKeySet; 3],
    fused: [FusedPass; 3],
}

pub fn triple_schedule(key: &TripleKey) -> TripleSchedule {
    let passes = [key.k1, key.k2, key.k3].map(key_schedule);
    let fused = passes.each_ref().map(fused::fuse_pass);
    TripleSchedule { passes, fused }
}

impl TripleSchedule {
    pub fn new(key: &TripleKey) -> Self {
        triple_schedule(key)
    }

    pub fn pass1(&self) -> &RoundKeySet {
        &self.passes[0]
    }

    pub fn pass2(&self) -> &RoundKeySet {
        &self.passes[1]
    }

    pub fn pass3(&self) -> &RoundKeySet {
        &self.passes[2]
    }

    /// All 48 subkeys, pass-major.
    pub fn subkeys(&self) -> impl Iterator<Item = u64> + '_ {
        self.passes.iter().flat_map(|p| p.subkeys().iter().copied())
    }

    /// Fused-kernel encryption, bit-identical to [`tdes_encrypt_block`].
    #[inline]
    pub fn encrypt_fused(&self, block: Block) -> Block {
        let (mut l, mut r) = fused::split(fused::initial_permutation(block.0));
        fused::run_pass(&mut l, &mut r, &self.fused[0], false);
        fused::run_pass(&mut r, &mut l, &self.fused[1], true);
        fused::run_pass(&mut l, &mut r, &self.fused[2], false);
        Block(fused::final_permutation(fused::join_swapped(l, r)))
    }

    /// Fused-kernel decryption, bit-identical to [`tdes_decrypt_block`].
    #[inline]
    pub fn decrypt_fused(&self, block: Block) -> Block {
        let (mut l, mut r) = fused::split(fused::initial_permutation(block.0));
        fused::run_pass(&mut l, &mut r, &self.fused[2], true);
        fused::run_pass(&mut r, &mut l, &self.fused[1], false);
        fused::run_pass(&mut l, &mut r, &self.fused[0], true);
        Block(fused::final_permutation(fused::join_swapped(l, r)))
    }
}

/// `E_k3(D_k2(E_k1(block)))` on the reference path.
pub fn tdes_encrypt_block(block: Block, ts: &TripleSchedule) -> Block {
    let b = des::encrypt_block(block, &ts.passes[0]);
    let b = des::decrypt_block(b, &ts.passes[1]);
    des::encrypt_block(b, &ts.passes[2])
}

/// `D_k1(E_k2(D_k3(block)))` on the reference path.
pub fn tdes_decrypt_block(block: Block, ts: &TripleSchedule) -> Block {
    let b = des::decrypt_block(block, &ts.passes[2]);
    let b = des::encrypt_block(b, &ts.passes[1]);
    des::decrypt_block(b, &ts.passes[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    const NIST_KEY: &str = "0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123";

    #[test]
    fn keying_option_inferred_from_length() {
        assert_eq!(
            TripleKey::from_hex(NIST_KEY).unwrap().option,
            KeyingOption::Option1
        );
        let k2 = TripleKey::from_hex(&NIST_KEY[..32]).unwrap();
        assert_eq!(k2.option, KeyingOption::Option2);
        assert_eq!(k2.k3, k2.k1);
        let k3 = TripleKey::from_hex(&NIST_KEY[..16]).unwrap();
        assert_eq!(k3.option, KeyingOption::Option3);
        assert!(k3.k1 == k3.k2 && k3.k2 == k3.k3);
    }

    #[test]
    fn key_format_errors() {
        assert!(matches!(
            TripleKey::from_hex("zz"),
            Err(Error::InvalidHex(_))
        ));
        assert!(matches!(
            TripleKey::from_hex("0123"),
            Err(Error::KeyLength(2))
        ));
        assert!(matches!(
            TripleKey::from_hex("012"),
            Err(Error::InvalidHex(_))
        ));
        assert!(matches!(
            TripleKey::from_bytes(&[0; 32]),
            Err(Error::KeyLength(32))
        ));
    }

    #[test]
    fn serialized_length_follows_option() {
        for len in [8usize, 16, 24] {
            let bytes: Vec<u8> = (0..len as u8).collect();
            let key = TripleKey::from_bytes(&bytes).unwrap();
            assert_eq!(key.to_bytes(), bytes);
            assert_eq!(TripleKey::from_hex(&key.to_hex()).unwrap(), key);
        }
    }

    #[test]
    fn schedule_structure_per_option() {
        let k3 = triple_schedule(&TripleKey::from_hex(&NIST_KEY[..16]).unwrap());
        assert_eq!(k3.pass1(), k3.pass2());
        assert_eq!(k3.pass2(), k3.pass3());
        let k2 = triple_schedule(&TripleKey::from_hex(&NIST_KEY[..32]).unwrap());
        assert_eq!(k2.pass1(), k2.pass3());
        assert_ne!(k2.pass1(), k2.pass2());
        assert_eq!(
            triple_schedule(&TripleKey::from_hex(NIST_KEY).unwrap())
                .subkeys()
                .count(),
            48
        );
    }

    #[test]
    fn nist_example_blocks() {
        let ts = triple_schedule(&TripleKey::from_hex(NIST_KEY).unwrap());
        let pt = Block(0x5468_6520_7175_6663);
        let ct = Block(0xA826_FD8C_E53B_855F);
        assert_eq!(tdes_encrypt_block(pt, &ts), ct);
        assert_eq!(ts.encrypt_fused(pt), ct);
        assert_eq!(tdes_decrypt_block(ct, &ts), pt);
        assert_eq!(ts.decrypt_fused(ct), pt);
    }

    #[test]
    fn parity_and_weak_key_reporting() {
        let key = TripleKey::from_hex("0123456789ABCDEF0101010101010101FFFFFFFFFFFFFFF0").unwrap();
        assert_eq!(key.weak_components(), vec![2]);
        assert!(matches!(key.check_weak(), Err(Error::WeakKey { key: 2 })));
        assert!(matches!(
            key.check_parity(),
            Err(Error::Parity { key: 3, byte: 0 })
        ));
        assert!(key.with_odd_parity().check_parity().is_ok());
        assert!(TripleKey::from_hex(NIST_KEY)
            .unwrap()
            .check_parity()
            .is_ok());
    }

    #[test]
    fn debug_does_not_leak_key_material() {
        let dbg = format!("{:?}", TripleKey::from_hex(NIST_KEY).unwrap());
        assert!(!dbg.contains("0123"));
    }
}
