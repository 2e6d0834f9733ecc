//! Runs the embedded known-answer vectors and prints a few of them.

use tdes_engine::kat::{verify_all, TDES_VECTORS};
use tdes_engine::tdes::{tdes_encrypt_block, triple_schedule, TripleKey};
use tdes_engine::Block;

fn main() {
    for v in TDES_VECTORS.iter().take(3) {
        let ts = triple_schedule(&TripleKey::from_hex(v.key).unwrap());
        let ct = tdes_encrypt_block(Block(v.plaintext), &ts);
        println!(
            "{} {:016X} -> {:016X} (expected {:016X})",
            v.key, v.plaintext, ct.0, v.ciphertext
        );
    }
    let report = verify_all();
    for f in &report.failures {
        println!("FAIL {f}");
    }
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
}
