//! Chunk-size sweep from 128 blocks to the whole payload, as a markdown
//! table. Small chunks pay the per-dispatch barrier many times over.
//!
//! cargo run --release --example chunk_sweep -- [payload-mib]

use std::io::Write;

use tdes_engine::bench::{emit_report, run_sweep, ReportFormat, SweepSpec};
use tdes_engine::ecb::DispatchConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mib: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(16);
    let blocks = (mib << 20) / 8;
    let mut spec = SweepSpec::chunk_sweep(DispatchConfig::default()).with_payload_bytes(mib << 20);
    spec.values.retain(|&c| c <= blocks);
    let records = run_sweep(&spec)?;
    std::io::stdout().write_all(&emit_report(&records, ReportFormat::Markdown)?)?;
    Ok(())
}
