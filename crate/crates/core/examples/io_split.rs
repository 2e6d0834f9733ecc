//! Streams a file through the engine and reports compute and I/O time
//! separately, once with the real cipher and once with the no-op backend.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};

use tdes_engine::bench::{bench_schedule, payload, DEFAULT_SEED};
use tdes_engine::ecb::{encrypt_stream, Backend, DispatchConfig, Engine, PaddingMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mb: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(16);
    let dir = tempfile::tempdir()?;
    let input = dir.path().join("payload.bin");
    File::create(&input)?.write_all(&payload(DEFAULT_SEED, mb << 20))?;

    let ts = bench_schedule();
    for backend in [Backend::Threaded, Backend::Noop] {
        let engine = Engine::new(DispatchConfig::default().with_backend(backend))?;
        let source = BufReader::new(File::open(&input)?);
        let sink = BufWriter::new(File::create(dir.path().join("out.bin"))?);
        let r = encrypt_stream(source, sink, &engine, &ts, PaddingMode::None)?;
        let share = r.compute.as_secs_f64() / r.total().as_secs_f64() * 100.0;
        println!("{backend}: {r} (compute {share:.1}% of total)");
    }
    Ok(())
}
