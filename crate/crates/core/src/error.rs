use std::io;

use thiserror::Error;

/// Errors produced by key parsing, the ECB engine and the stream layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid hex in key: {0}")]
    InvalidHex(String),

    #[error("key must be 8, 16 or 24 bytes (16, 32 or 48 hex characters), got {0} bytes")]
    KeyLength(usize),

    #[error("key {key} byte {byte} does not have odd parity")]
    Parity { key: usize, byte: usize },

    #[error("key {key} is a weak or semi-weak DES key")]
    WeakKey { key: usize },

    #[error("input length {0} is not a multiple of 8 (use PKCS#7 padding)")]
    InputLength(u64),

    #[error("ciphertext length not a multiple of 8 ({0} bytes)")]
    CiphertextLength(u64),

    #[error("invalid PKCS#7 padding")]
    BadPadding,

    #[error("invalid dispatch configuration: {0}")]
    Config(String),

    #[error("report error: {0}")]
    Report(#[from] csv::Error),

    #[error("I/O error at byte offset {offset}: {source}")]
    Io {
        offset: u64,
        #[source]
        source: io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
