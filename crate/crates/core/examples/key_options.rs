//! The three keying options, parity handling and weak-key detection.

use tdes_engine::des::{encrypt_block, key_schedule};
use tdes_engine::tdes::{tdes_encrypt_block, triple_schedule, TripleKey};
use tdes_engine::Block;

fn main() {
    let pt = Block(0x5468_6520_7175_6663);
    for hex in [
        "0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123",
        "0123456789ABCDEF23456789ABCDEF01",
        "0123456789ABCDEF",
    ] {
        let key = TripleKey::from_hex(hex).unwrap();
        let ct = tdes_encrypt_block(pt, &triple_schedule(&key));
        println!("{:?}: {:016X}", key.option, ct.0);
    }

    // One key: encrypt, decrypt, encrypt with the same key is plain DES.
    let key = TripleKey::from_hex("133457799BBCDFF1").unwrap();
    let single = encrypt_block(pt, &key_schedule(key.k1));
    assert_eq!(tdes_encrypt_block(pt, &triple_schedule(&key)), single);
    println!("single-key 3DES equals DES: {:016X}", single.0);

    let sloppy = TripleKey::from_hex("0023456789ABCDEF").unwrap();
    match sloppy.check_parity() {
        Ok(()) => println!("parity ok"),
        Err(e) => println!("{e}; fixed: {}", sloppy.with_odd_parity().to_hex()),
    }

    let weak = TripleKey::from_hex("0123456789ABCDEF01010101010101011F1F1F1F0E0E0E0E").unwrap();
    println!("weak components: {:?}", weak.weak_components());
    if let Err(e) = weak.check_weak() {
        println!("{e}");
    }
}
