//! Triple-DES (EDE) in ECB mode, dispatched in fixed-size chunks of 64-bit
//! blocks to a pool of workers.
//!
//! * [`des`]: single-block DES on the plain standard tables, plus a
//!   table-fused kernel.
//! * [`tdes`]: keying options and the 48-round-key schedule.
//! * [`ecb`]: dispatch planning, the scalar reference and threaded
//!   backends, PKCS#7 padding and chunked streaming.
//! * [`bench`]: work-group, chunk-size and worker-scaling sweeps with CSV
//!   and markdown reports.
//! * [`kat`]: embedded known-answer vectors.
//! * [`cli`]: the `tdes` command.
//!
//! ```
//! use tdes_engine::ecb::{Batch, DispatchConfig, Engine};
//! use tdes_engine::tdes::{triple_schedule, TripleKey};
//!
//! let key = TripleKey::from_hex("0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123").unwrap();
//! let ts = triple_schedule(&key);
//! let engine = Engine::new(DispatchConfig::threaded(2)).unwrap();
//! let batch = Batch::from_bytes(b"The qufck brown fox jump", 0).unwrap();
//! let ct = engine.encrypt_batch(&batch, &ts);
//! assert_eq!(ct.blocks[0].0, 0xA826_FD8C_E53B_855F);
//! assert_eq!(engine.decrypt_batch(&ct, &ts), batch);
//! ```

pub mod bench;
pub mod cli;
pub mod des;
pub mod ecb;
mod error;
pub mod kat;
pub mod tdes;

pub use des::{Block, DesKey, RoundKeySet};
pub use error::{Error, Result};
pub use tdes::{TripleKey, TripleSchedule};
