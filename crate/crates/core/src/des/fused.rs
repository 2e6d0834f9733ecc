//! Table-fused DES kernel.
//!
//! Derived at compile time from the plain tables in [`super::tables`]:
//!
//! * `SP[i][v]` is S-box `i` applied to `v` followed by permutation P, so a
//!   round is eight lookups ORed together.
//! * The expansion E is never materialized. Each S-box reads six adjacent
//!   bits of the right half (with wrap-around), which two rotations of the
//!   half line up on byte boundaries: even-numbered S-boxes read from
//!   `r.rotate_right(3)`, odd-numbered ones from `r.rotate_left(1)`.
//!   Round keys are pre-split into matching byte lanes ([`FusedRound`]).
//! * IP and FP are applied as sixteen nibble-indexed lookups each.
//!
//! Between chained passes (as in EDE) `IP(FP(x)) = x`, so a multi-pass
//! kernel permutes once on entry and once on exit and only swaps halves
//! between passes.

use super::tables::{permute, sbox, FP, IP, P};
use super::{Block, RoundKeySet};

const fn build_sp() -> [[u32; 64]; 8] {
    let mut sp = [[0u32; 64]; 8];
    let mut i = 0;
    while i < 8 {
        let mut v = 0;
        while v < 64 {
            let nibble = (sbox(i, v as u8) as u64) << (28 - 4 * i);
            sp[i][v] = permute(nibble, 32, &P) as u32;
            v += 1;
        }
        i += 1;
    }
    sp
}

const fn build_nibble_table(table: &[u8; 64]) -> [[u64; 16]; 16] {
    let mut out = [[0u64; 16]; 16];
    let mut n = 0;
    while n < 16 {
        let mut v = 0;
        while v < 16 {
            out[n][v] = permute((v as u64) << (60 - 4 * n), 64, table);
            v += 1;
        }
        n += 1;
    }
    out
}

static SP: [[u32; 64]; 8] = build_sp();
static IP_NIBBLES: [[u64; 16]; 16] = build_nibble_table(&IP);
static FP_NIBBLES: [[u64; 16]; 16] = build_nibble_table(&FP);

#[inline(always)]
fn permute_by_nibbles(x: u64, table: &[[u64; 16]; 16]) -> u64 {
    let mut out = 0;
    for (n, lane) in table.iter().enumerate() {
        out |= lane[((x >> (60 - 4 * n)) & 0xf) as usize];
    }
    out
}

#[inline(always)]
pub fn initial_permutation(x: u64) -> u64 {
    permute_by_nibbles(x, &IP_NIBBLES)
}

#[inline(always)]
pub fn final_permutation(x: u64) -> u64 {
    permute_by_nibbles(x, &FP_NIBBLES)
}

/// A 48-bit round key split into the byte lanes the fused round expects.
///
/// `even` carries the 6-bit key pieces for S-boxes 1, 3, 5, 7 (1-based) in
/// bytes 3..0, `odd` those for S-boxes 2, 4, 6, 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct FusedRound {
    even: u32,
    odd: u32,
}

impl FusedRound {
    pub fn from_subkey(subkey: u64) -> Self {
        let piece = |i: u32| ((subkey >> (42 - 6 * i)) & 0x3f) as u32;
        FusedRound {
            even: piece(0) << 24 | piece(2) << 16 | piece(4) << 8 | piece(6),
            odd: piece(1) << 24 | piece(3) << 16 | piece(5) << 8 | piece(7),
        }
    }
}

/// One pass worth of fused round keys, in encryption order.
pub type FusedPass = [FusedRound; 16];

pub fn fuse_pass(keys: &RoundKeySet) -> FusedPass {
    keys.subkeys().map(FusedRound::from_subkey)
}

#[inline(always)]
fn round_function(right: u32, k: &FusedRound) -> u32 {
    let x = right.rotate_right(3) ^ k.even;
    let y = right.rotate_left(1) ^ k.odd;
    SP[0][(x >> 24) as usize & 0x3f]
        | SP[2][(x >> 16) as usize & 0x3f]
        | SP[4][(x >> 8) as usize & 0x3f]
        | SP[6][x as usize & 0x3f]
        | SP[1][(y >> 24) as usize & 0x3f]
        | SP[3][(y >> 16) as usize & 0x3f]
        | SP[5][(y >> 8) as usize & 0x3f]
        | SP[7][y as usize & 0x3f]
}

/// Runs 16 rounds on the halves. Leaves them unswapped, i.e. `(L16, R16)`.
#[inline(always)]
pub fn run_pass(left: &mut u32, right: &mut u32, pass: &FusedPass, reverse: bool) {
    let (mut l, mut r) = (*left, *right);
    if reverse {
        for pair in pass.rchunks_exact(2) {
            l ^= round_function(r, &pair[1]);
            r ^= round_function(l, &pair[0]);
        }
    } else {
        for pair in pass.chunks_exact(2) {
            l ^= round_function(r, &pair[0]);
            r ^= round_function(l, &pair[1]);
        }
    }
    // Two rounds per iteration leave each half in its own register.
    *left = l;
    *right = r;
}

#[inline(always)]
pub fn split(x: u64) -> (u32, u32) {
    ((x >> 32) as u32, x as u32)
}

/// Joins halves as the preoutput `R16 || L16`.
#[inline(always)]
pub fn join_swapped(left: u32, right: u32) -> u64 {
    ((right as u64) << 32) | left as u64
}

pub fn encrypt_block(block: Block, pass: &FusedPass) -> Block {
    let (mut l, mut r) = split(initial_permutation(block.0));
    run_pass(&mut l, &mut r, pass, false);
    Block(final_permutation(join_swapped(l, r)))
}

pub fn decrypt_block(block: Block, pass: &FusedPass) -> Block {
    let (mut l, mut r) = split(initial_permutation(block.0));
    run_pass(&mut l, &mut r, pass, true);
    Block(final_permutation(join_swapped(l, r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::des::{self, key_schedule, DesKey};

    #[test]
    fn nibble_permutations_match_plain_tables() {
        let mut x = 0x0123_4567_89AB_CDEFu64;
        for _ in 0..256 {
            assert_eq!(initial_permutation(x), permute(x, 64, &IP));
            assert_eq!(final_permutation(x), permute(x, 64, &FP));
            x = x.rotate_left(7).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 0xA5;
        }
    }

    #[test]
    fn fused_matches_reference_on_walkthrough() {
        let ks = key_schedule(DesKey::new(0x1334_5779_9BBC_DFF1));
        let pass = fuse_pass(&ks);
        let pt = Block(0x0123_4567_89AB_CDEF);
        assert_eq!(encrypt_block(pt, &pass), Block(0x85E8_1354_0F0A_B405));
        assert_eq!(encrypt_block(pt, &pass), des::encrypt_block(pt, &ks));
        assert_eq!(decrypt_block(Block(0x85E8_1354_0F0A_B405), &pass), pt);
    }
}
