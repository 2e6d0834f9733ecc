//! Single-block DES: key handling, key schedule and the Feistel network.
//!
//! Functions in this module compute straight from the tables in [`tables`],
//! one bit at a time. They form the reference path every faster kernel is
//! checked against. [`fused`] holds the table-fused kernel used by the
//! threaded backend.

pub mod fused;
pub mod tables;

use std::fmt;

use tables::{permute, sbox, E, FP, IP, P, PC1, PC2, SHIFTS};

/// One 64-bit data block. Serialized big-endian.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
#[repr(transparent)]
pub struct Block(pub u64);

impl Block {
    pub const fn from_bytes(bytes: [u8; 8]) -> Self {
        Block(u64::from_be_bytes(bytes))
    }

    pub const fn to_bytes(self) -> [u8; 8] {
        self.0.to_be_bytes()
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Block({:016X})", self.0)
    }
}

impl From<u64> for Block {
    fn from(v: u64) -> Self {
        Block(v)
    }
}

/// A single DES key: 56 key bits plus one parity bit (the LSB) per byte.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DesKey(u64);

/// The four keys whose schedule makes encryption an involution.
pub const WEAK_KEYS: [u64; 4] = [
    0x0101_0101_0101_0101,
    0xFEFE_FEFE_FEFE_FEFE,
    0xE0E0_E0E0_F1F1_F1F1,
    0x1F1F_1F1F_0E0E_0E0E,
];

/// The twelve semi-weak keys, in pairs `(k, k')` with `E_k = D_k'`.
pub const SEMI_WEAK_KEYS: [u64; 12] = [
    0x011F_011F_010E_010E,
    0x1F01_1F01_0E01_0E01,
    0x01E0_01E0_01F1_01F1,
    0xE001_E001_F101_F101,
    0x01FE_01FE_01FE_01FE,
    0xFE01_FE01_FE01_FE01,
    0x1FE0_1FE0_0EF1_0EF1,
    0xE01F_E01F_F10E_F10E,
    0x1FFE_1FFE_0EFE_0EFE,
    0xFE1F_FE1F_FE0E_FE0E,
    0xE0FE_E0FE_F1FE_F1FE,
    0xFEE0_FEE0_FEF1_FEF1,
];

const PARITY_MASK: u64 = 0x0101_0101_0101_0101;

impl DesKey {
    pub const fn new(raw: u64) -> Self {
        DesKey(raw)
    }

    pub const fn from_bytes(bytes: [u8; 8]) -> Self {
        DesKey(u64::from_be_bytes(bytes))
    }

    pub const fn raw(self) -> u64 {
        self.0
    }

    pub const fn to_bytes(self) -> [u8; 8] {
        self.0.to_be_bytes()
    }

    /// True when every byte has an odd number of set bits.
    pub fn has_odd_parity(self) -> bool {
        self.0.to_be_bytes().iter().all(|b| b.count_ones() % 2 == 1)
    }

    /// Index of the first byte with even parity, if any.
    pub fn first_parity_error(self) -> Option<usize> {
        self.0
            .to_be_bytes()
            .iter()
            .position(|b| b.count_ones() % 2 == 0)
    }

    /// Returns the key with each byte's LSB set so the byte has odd parity.
    pub fn with_odd_parity(self) -> Self {
        let bytes = self.0.to_be_bytes().map(|b| {
            let upper = b & 0xFE;
            upper | (upper.count_ones() % 2 == 0) as u8
        });
        DesKey::from_bytes(bytes)
    }

    /// Weak-key test ignoring parity bits.
    pub fn is_weak(self) -> bool {
        let k = self.0 & !PARITY_MASK;
        WEAK_KEYS.iter().any(|&w| w & !PARITY_MASK == k)
    }

    pub fn is_semi_weak(self) -> bool {
        let k = self.0 & !PARITY_MASK;
        SEMI_WEAK_KEYS.iter().any(|&w| w & !PARITY_MASK == k)
    }
}

impl fmt::Debug for DesKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DesKey({:016X})", self.0)
    }
}

/// The 16 round keys of one DES pass, in encryption order.
///
/// Each subkey occupies the low 48 bits of its `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RoundKeySet([u64; 16]);

impl RoundKeySet {
    pub fn subkeys(&self) -> &[u64; 16] {
        &self.0
    }
}

const MASK28: u64 = (1 << 28) - 1;

fn rotl28(x: u64, n: u32) -> u64 {
    ((x << n) | (x >> (28 - n))) & MASK28
}

/// Derives the 16 round keys (PC-1, per-round rotations, PC-2).
pub fn key_schedule(key: DesKey) -> RoundKeySet {
    let cd = permute(key.raw(), 64, &PC1);
    let mut c = cd >> 28;
    let mut d = cd & MASK28;
    let mut subkeys = [0u64; 16];
    for (subkey, &shift) in subkeys.iter_mut().zip(SHIFTS.iter()) {
        c = rotl28(c, shift);
        d = rotl28(d, shift);
        *subkey = permute((c << 28) | d, 56, &PC2);
    }
    RoundKeySet(subkeys)
}

/// The round function: expansion, key mixing, S-boxes, permutation P.
fn feistel(right: u32, subkey: u64) -> u32 {
    let mixed = permute(right as u64, 32, &E) ^ subkey;
    let substituted = (0..8).fold(0u64, |acc, i| {
        let six = ((mixed >> (42 - 6 * i)) & 0x3f) as u8;
        (acc << 4) | sbox(i, six) as u64
    });
    permute(substituted, 32, &P) as u32
}

fn crypt<'a>(block: Block, subkeys: impl Iterator<Item = &'a u64>) -> Block {
    let permuted = permute(block.0, 64, &IP);
    let mut left = (permuted >> 32) as u32;
    let mut right = permuted as u32;
    for &k in subkeys {
        let next = left ^ feistel(right, k);
        left = right;
        right = next;
    }
    let preoutput = ((right as u64) << 32) | left as u64;
    Block(permute(preoutput, 64, &FP))
}

pub fn encrypt_block(block: Block, schedule: &RoundKeySet) -> Block {
    crypt(block, schedule.0.iter())
}

/// Same network as [`encrypt_block`] with the subkeys applied in reverse.
pub fn decrypt_block(block: Block, schedule: &RoundKeySet) -> Block {
    crypt(block, schedule.0.iter().rev())
}
