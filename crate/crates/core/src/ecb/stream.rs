//! Chunked streaming over `Read`/`Write`.
//!
//! Each chunk of `chunk_blocks * 8` bytes is read, transformed by one
//! dispatch and written before the next is read. Time spent in the engine
//! is reported as compute; reads, writes and the byte/block conversions
//! around them are reported as I/O.

use std::fmt;
use std::io::{ErrorKind, Read, Write};
use std::time::{Duration, Instant};

use super::dispatch::{decode_blocks, encode_blocks, Direction, Engine};
use super::padding::{pkcs7_pad, pkcs7_unpadded_len, PaddingMode};
use crate::des::Block;
use crate::error::{Error, Result};
use crate::tdes::TripleSchedule;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StreamReport {
    pub bytes_in: u64,
    pub bytes_out: u64,
    pub chunks: u64,
    pub compute: Duration,
    pub io: Duration,
}

impl StreamReport {
    pub fn total(&self) -> Duration {
        self.compute + self.io
    }
}

impl fmt::Display for StreamReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} bytes in, {} bytes out, {} chunks, compute {:.6} s, I/O {:.6} s",
            self.bytes_in,
            self.bytes_out,
            self.chunks,
            self.compute.as_secs_f64(),
            self.io.as_secs_f64()
        )
    }
}

/// Reads until `buf` is full or the source is exhausted.
fn read_full(source: &mut impl Read, buf: &mut [u8], offset: u64) -> Result<usize> {
    let mut filled = 0;
    while filled < buf.len() {
        match source.read(&mut buf[filled..]) {
            Ok(0) => break,
            Ok(n) => filled += n,
            Err(e) if e.kind() == ErrorKind::Interrupted => {}
            Err(source) => {
                return Err(Error::Io {
                    offset: offset + filled as u64,
                    source,
                })
            }
        }
    }
    Ok(filled)
}

fn write_at(sink: &mut impl Write, data: &[u8], offset: u64) -> Result<()> {
    sink.write_all(data)
        .map_err(|source| Error::Io { offset, source })
}

struct Pipeline<'a> {
    engine: &'a Engine,
    ts: &'a TripleSchedule,
    direction: Direction,
    blocks: Vec<Block>,
    report: StreamReport,
}

impl Pipeline<'_> {
    /// Transforms `bytes` (a multiple of 8 long) in place.
    fn transform(&mut self, bytes: &mut [u8]) {
        let t = Instant::now();
        let n = bytes.len() / 8;
        self.blocks.resize(n, Block::default());
        decode_blocks(bytes, &mut self.blocks);
        self.report.io += t.elapsed();

        let t = Instant::now();
        let dispatched = self.engine.apply(self.ts, self.direction, &mut self.blocks);
        self.report.compute += t.elapsed();
        self.report.chunks += dispatched as u64;

        let t = Instant::now();
        encode_blocks(&self.blocks, bytes);
        self.report.io += t.elapsed();
    }

    fn read(&mut self, source: &mut impl Read, buf: &mut [u8]) -> Result<usize> {
        let t = Instant::now();
        let n = read_full(source, buf, self.report.bytes_in)?;
        self.report.io += t.elapsed();
        self.report.bytes_in += n as u64;
        Ok(n)
    }

    fn write(&mut self, sink: &mut impl Write, data: &[u8]) -> Result<()> {
        let t = Instant::now();
        write_at(sink, data, self.report.bytes_out)?;
        self.report.io += t.elapsed();
        self.report.bytes_out += data.len() as u64;
        Ok(())
    }

    fn flush(&mut self, sink: &mut impl Write) -> Result<()> {
        let t = Instant::now();
        sink.flush().map_err(|source| Error::Io {
            offset: self.report.bytes_out,
            source,
        })?;
        self.report.io += t.elapsed();
        Ok(())
    }
}

fn chunk_bytes(engine: &Engine) -> usize {
    engine.config().chunk_blocks * 8
}

/// Encrypts everything from `source` into `sink`.
///
/// With [`PaddingMode::None`] the source length must be a multiple of 8;
/// otherwise [`Error::InputLength`] is returned once the ragged tail is
/// reached (earlier chunks will already have been written).
pub fn encrypt_stream(
    mut source: impl Read,
    mut sink: impl Write,
    engine: &Engine,
    ts: &TripleSchedule,
    pad: PaddingMode,
) -> Result<StreamReport> {
    let mut p = Pipeline {
        engine,
        ts,
        direction: Direction::Encrypt,
        blocks: Vec::new(),
        report: StreamReport::default(),
    };
    let size = chunk_bytes(engine);
    let mut buf = vec![0u8; size];
    loop {
        buf.resize(size, 0);
        let n = p.read(&mut source, &mut buf)?;
        let eof = n < size;
        buf.truncate(n);
        if eof {
            match pad {
                PaddingMode::Pkcs7 => pkcs7_pad(&mut buf),
                PaddingMode::None if n % 8 != 0 => {
                    return Err(Error::InputLength(p.report.bytes_in))
                }
                PaddingMode::None => {}
            }
        }
        if !buf.is_empty() {
            p.transform(&mut buf);
            p.write(&mut sink, &buf)?;
        }
        if eof {
            break;
        }
    }
    p.flush(&mut sink)?;
    Ok(p.report)
}

/// Decrypts everything from `source` into `sink`, stripping PKCS#7 padding
/// from the final block when `pad` asks for it.
pub fn decrypt_stream(
    mut source: impl Read,
    mut sink: impl Write,
    engine: &Engine,
    ts: &TripleSchedule,
    pad: PaddingMode,
) -> Result<StreamReport> {
    let mut p = Pipeline {
        engine,
        ts,
        direction: Direction::Decrypt,
        blocks: Vec::new(),
        report: StreamReport::default(),
    };
    let size = chunk_bytes(engine);
    let mut buf = vec![0u8; size];
    // With PKCS#7 the last plaintext block is held back until EOF is known.
    let mut held: Option<[u8; 8]> = None;
    loop {
        let n = p.read(&mut source, &mut buf)?;
        let eof = n < size;
        if eof && n % 8 != 0 {
            return Err(Error::CiphertextLength(p.report.bytes_in));
        }
        if n > 0 {
            let data = &mut buf[..n];
            p.transform(data);
            match pad {
                PaddingMode::None => p.write(&mut sink, data)?,
                PaddingMode::Pkcs7 => {
                    if let Some(prev) = held.take() {
                        p.write(&mut sink, &prev)?;
                    }
                    let (body, last) = data.split_at(n - 8);
                    p.write(&mut sink, body)?;
                    held = Some(last.try_into().unwrap());
                }
            }
        }
        if eof {
            break;
        }
    }
    if pad == PaddingMode::Pkcs7 {
        let last = held.ok_or(Error::BadPadding)?;
        let keep = pkcs7_unpadded_len(&last)?;
        p.write(&mut sink, &last[..keep])?;
    }
    p.flush(&mut sink)?;
    Ok(p.report)
}
