//! Encrypts a file with PKCS#7 padding, decrypts it again and checks the
//! round trip.
//!
//! cargo run --release --example encrypt_file -- <input> [key-hex]

use std::fs::File;
use std::io::{BufReader, BufWriter};

use tdes_engine::ecb::{decrypt_stream, encrypt_stream, DispatchConfig, Engine, PaddingMode};
use tdes_engine::tdes::{triple_schedule, TripleKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let input = args.next().ok_or("usage: encrypt_file <input> [key-hex]")?;
    let key: TripleKey = args
        .next()
        .as_deref()
        .unwrap_or("0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123")
        .parse()?;
    let ts = triple_schedule(&key);
    let engine = Engine::new(DispatchConfig::default())?;

    let encrypted = format!("{input}.enc");
    let decrypted = format!("{input}.dec");
    let r = encrypt_stream(
        BufReader::new(File::open(&input)?),
        BufWriter::new(File::create(&encrypted)?),
        &engine,
        &ts,
        PaddingMode::Pkcs7,
    )?;
    println!("encrypt: {r}");
    let r = decrypt_stream(
        BufReader::new(File::open(&encrypted)?),
        BufWriter::new(File::create(&decrypted)?),
        &engine,
        &ts,
        PaddingMode::Pkcs7,
    )?;
    println!("decrypt: {r}");

    let same = std::fs::read(&input)? == std::fs::read(&decrypted)?;
    println!(
        "{decrypted} {} {input}",
        if same { "matches" } else { "DIFFERS FROM" }
    );
    Ok(())
}
