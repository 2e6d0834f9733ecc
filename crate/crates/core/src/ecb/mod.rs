//! ECB batch engine: dispatch planning, backends, padding and streaming.

mod dispatch;
mod padding;
mod stream;

pub use dispatch::{
    available_workers, decode_blocks, decrypt_batch, encode_blocks, encrypt_batch, groups_for,
    plan_dispatch, Backend, Batch, Direction, DispatchConfig, Engine, Span, DEFAULT_CHUNK_BLOCKS,
    DEFAULT_WORK_GROUP,
};
pub use padding::{pkcs7_pad, pkcs7_unpad, pkcs7_unpadded_len, PaddingMode};
pub use stream::{decrypt_stream, encrypt_stream, StreamReport};
