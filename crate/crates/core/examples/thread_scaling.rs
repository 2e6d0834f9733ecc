//! Worker-count sweep with a speedup table relative to one worker.
//!
//! cargo run --release --example thread_scaling -- [payload-mib]

use tdes_engine::bench::{run_sweep, speedup_table, Baseline, SweepSpec};
use tdes_engine::ecb::DispatchConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mib: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(64);
    let spec = SweepSpec::worker_sweep(DispatchConfig::default()).with_payload_bytes(mib << 20);
    let records = run_sweep(&spec)?;
    print!("{}", speedup_table(&records, Baseline::Workers(1))?);
    Ok(())
}
