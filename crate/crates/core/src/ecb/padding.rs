use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PaddingMode {
    /// Input must already be a multiple of 8 bytes.
    #[default]
    None,
    /// Always appends 1..=8 bytes, each equal to the pad length.
    Pkcs7,
}

impl fmt::Display for PaddingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PaddingMode::None => "none",
            PaddingMode::Pkcs7 => "pkcs7",
        })
    }
}

impl FromStr for PaddingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(PaddingMode::None),
            "pkcs7" => Ok(PaddingMode::Pkcs7),
            other => Err(Error::Config(format!("unknown padding '{other}'"))),
        }
    }
}

/// Appends PKCS#7 padding to a 0..=7 byte (or any length) tail in place.
pub fn pkcs7_pad(data: &mut Vec<u8>) {
    let pad = 8 - (data.len() % 8);
    data.resize(data.len() + pad, pad as u8);
}

/// Length of `data` without its PKCS#7 padding.
pub fn pkcs7_unpadded_len(data: &[u8]) -> Result<usize> {
    if data.is_empty() || !data.len().is_multiple_of(8) {
        return Err(Error::BadPadding);
    }
    let pad = *data.last().unwrap() as usize;
    if pad == 0 || pad > 8 || data[data.len() - pad..].iter().any(|&b| b as usize != pad) {
        return Err(Error::BadPadding);
    }
    Ok(data.len() - pad)
}

pub fn pkcs7_unpad(data: &mut Vec<u8>) -> Result<()> {
    let len = pkcs7_unpadded_len(data)?;
    data.truncate(len);
    Ok(())
}
