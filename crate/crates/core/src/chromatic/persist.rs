//! Binary persistence of the deletion-contraction cache.
//!
//! Layout: magic `CHRC`, version u32, entry count u64, then per entry the key
//! (u32 length + bytes) and the polynomial (u32 coefficient count, each
//! coefficient as a sign byte plus u32 length + little-endian magnitude).

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use num_bigint::{BigInt, Sign};

use super::engine::ChromCache;
use crate::algebra::{IntPoly, Var};

const MAGIC: &[u8; 4] = b"CHRC";
const VERSION: u32 = 1;

pub fn save(cache: &ChromCache, path: &Path) -> io::Result<()> {
    let mut buf = Vec::new();
    buf.extend_from_slice(MAGIC);
    buf.extend_from_slice(&VERSION.to_le_bytes());
    let entries = cache.entries();
    buf.extend_from_slice(&(entries.len() as u64).to_le_bytes());
    for (k, p) in entries {
        buf.extend_from_slice(&(k.len() as u32).to_le_bytes());
        buf.extend_from_slice(&k);
        buf.extend_from_slice(&(p.coeffs().len() as u32).to_le_bytes());
        for c in p.coeffs() {
            let (sign, mag) = c.to_bytes_le();
            buf.push(match sign {
                Sign::Minus => 2,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            });
            buf.extend_from_slice(&(mag.len() as u32).to_le_bytes());
            buf.extend_from_slice(&mag);
        }
    }
    let tmp = path.with_extension("tmp");
    fs::File::create(&tmp)?.write_all(&buf)?;
    fs::rename(tmp, path)
}

fn bad(msg: &str) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg.to_string())
}

struct Cursor<'a>(&'a [u8]);

impl Cursor<'_> {
    fn take(&mut self, n: usize) -> io::Result<&[u8]> {
        if self.0.len() < n {
            return Err(bad("truncated cache file"));
        }
        let (a, b) = self.0.split_at(n);
        self.0 = b;
        Ok(a)
    }

    fn u32(&mut self) -> io::Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> io::Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

/// Merge entries from `path` into `cache`; returns how many were read.
pub fn load(cache: &ChromCache, path: &Path) -> io::Result<usize> {
    let mut data = Vec::new();
    fs::File::open(path)?.read_to_end(&mut data)?;
    let mut c = Cursor(&data);
    if c.take(4)? != MAGIC {
        return Err(bad("not a cache file"));
    }
    if c.u32()? != VERSION {
        return Err(bad("unsupported cache version"));
    }
    let count = c.u64()? as usize;
    for _ in 0..count {
        let klen = c.u32()? as usize;
        let key = c.take(klen)?.to_vec();
        let n = c.u32()? as usize;
        let mut coeffs = Vec::with_capacity(n);
        for _ in 0..n {
            let sign = match c.take(1)?[0] {
                0 => Sign::NoSign,
                1 => Sign::Plus,
                2 => Sign::Minus,
                _ => return Err(bad("bad sign byte")),
            };
            let len = c.u32()? as usize;
            coeffs.push(BigInt::from_bytes_le(sign, c.take(len)?));
        }
        cache.insert(key, IntPoly::new(Var::Q, coeffs));
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let c = ChromCache::new();
        c.insert(
            vec![1, 2, 3],
            IntPoly::from_i64(Var::Q, &[0, -6, 11, -6, 1]),
        );
        c.insert(vec![9], IntPoly::from_i64(Var::Q, &[0, 1]));
        let dir = std::env::temp_dir().join(format!("chromalg-cache-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let p = dir.join("dc.bin");
        save(&c, &p).unwrap();
        let d = ChromCache::new();
        assert_eq!(load(&d, &p).unwrap(), 2);
        assert_eq!(d.entries(), c.entries());
        fs::remove_dir_all(dir).unwrap();
    }
}
