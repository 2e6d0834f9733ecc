//! ECB maps equal plaintext blocks to equal ciphertext blocks, so structure
//! in the input survives encryption.

use tdes_engine::bench::bench_schedule;
use tdes_engine::ecb::{Batch, DispatchConfig, Engine};

fn main() {
    let ts = bench_schedule();
    let engine = Engine::new(DispatchConfig::default()).unwrap();

    // A 16x8 "image" of two colours, one block per pixel.
    let rows = [
        "................",
        "..####....####..",
        "..#..#....#..#..",
        "..####....####..",
        "................",
        ".#............#.",
        "..############..",
        "................",
    ];
    let pixels: Vec<u8> = rows
        .iter()
        .flat_map(|r| r.bytes())
        .flat_map(|c| [c; 8])
        .collect();
    let ct = engine.encrypt_batch(&Batch::from_bytes(&pixels, 0).unwrap(), &ts);

    let background = ct.blocks[0];
    for row in ct.blocks.chunks(16) {
        let line: String = row
            .iter()
            .map(|b| if *b == background { '.' } else { '#' })
            .collect();
        println!("{line}");
    }
    println!(
        "\nblocks {:016X} and {:016X} repeat throughout",
        background.0, ct.blocks[18].0
    );
}
