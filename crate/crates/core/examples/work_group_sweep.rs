//! Work-group sweep at the default chunk size, written as CSV to stdout.
//!
//! cargo run --release --example work_group_sweep -- [payload-mib]

use std::io::Write;

use tdes_engine::bench::{emit_report, run_sweep, ReportFormat, SweepSpec};
use tdes_engine::ecb::DispatchConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mib: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(16);
    let spec = SweepSpec::work_group_sweep(DispatchConfig::default()).with_payload_bytes(mib << 20);
    let records = run_sweep(&spec)?;
    std::io::stdout().write_all(&emit_report(&records, ReportFormat::Csv)?)?;
    Ok(())
}
