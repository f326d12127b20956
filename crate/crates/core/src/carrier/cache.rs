//! On-disk cache of sieved blocks.
//!
//! One file per block, named `seg-<base>-<len>.ncsv`. Layout, all integers
//! little-endian:
//!
//! | offset | size | field                          |
//! |--------|------|--------------------------------|
//! | 0      | 4    | magic `b"NCSV"`                |
//! | 4      | 4    | version (`u32`, currently 1)   |
//! | 8      | 8    | segment base (`u64`)           |
//! | 16     | 8    | segment length (`u64`)         |
//! | 24     | ⌈len/8⌉ | bitmap, bit `i` of byte `i/8` set iff `base + i` is prime |
//!
//! Files that fail validation are treated as cache misses.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::sieve::Segment;
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"NCSV";
pub const VERSION: u32 = 1;
pub const HEADER_LEN: usize = 24;

pub fn segment_path(dir: &Path, base: u64, len: u64) -> PathBuf {
    dir.join(format!("seg-{base}-{len}.ncsv"))
}

pub fn encode(seg: &Segment) -> Vec<u8> {
    let nbytes = seg.len.div_ceil(8) as usize;
    let mut out = Vec::with_capacity(HEADER_LEN + nbytes);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&seg.base.to_le_bytes());
    out.extend_from_slice(&seg.len.to_le_bytes());
    for word in seg.words() {
        out.extend_from_slice(&word.to_le_bytes());
    }
    out.truncate(HEADER_LEN + nbytes);
    out
}

pub fn decode(bytes: &[u8]) -> Result<Segment> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::Segment(format!(
            "{} bytes is shorter than the header",
            bytes.len()
        )));
    }
    if &bytes[0..4] != MAGIC {
        return Err(Error::Segment("bad magic".into()));
    }
    let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
    if version != VERSION {
        return Err(Error::Segment(format!("unsupported version {version}")));
    }
    let base = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
    let len = u64::from_le_bytes(bytes[16..24].try_into().unwrap());
    let body = &bytes[HEADER_LEN..];
    if body.len() as u64 != len.div_ceil(8) {
        return Err(Error::Segment(format!(
            "bitmap has {} bytes, expected {}",
            body.len(),
            len.div_ceil(8)
        )));
    }
    let mut words = Vec::with_capacity(len.div_ceil(64) as usize);
    for chunk in body.chunks(8) {
        let mut buf = [0u8; 8];
        buf[..chunk.len()].copy_from_slice(chunk);
        words.push(u64::from_le_bytes(buf));
    }
    if let (Some(last), tail @ 1..) = (words.last_mut(), len % 64) {
        *last &= (1u64 << tail) - 1;
    }
    Ok(Segment::from_words(base, len, words))
}

pub(crate) fn load(dir: &Path, base: u64, len: u64) -> Option<Segment> {
    let bytes = fs::read(segment_path(dir, base, len)).ok()?;
    let seg = decode(&bytes).ok()?;
    (seg.base == base && seg.len == len).then_some(seg)
}

pub(crate) fn store(dir: &Path, seg: &Segment) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = segment_path(dir, seg.base, seg.len);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut file = fs::File::create(&tmp)?;
    file.write_all(&encode(seg))?;
    file.sync_all()?;
    fs::rename(tmp, path)?;
    Ok(())
}
