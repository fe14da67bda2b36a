//! Disk cache for constructed modules: packed-word binary matrices plus a
//! JSON sidecar carrying shape, basis-order version, and a content hash.

use serde::{Deserialize, Serialize};
use specht_core::f2::F2Matrix;
use specht_core::partition::Partition;
use specht_core::rep::RepModule;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

pub const BASIS_ORDER_VERSION: &str = "column-word-lex-v1";
const MAGIC: &[u8; 4] = b"F2MX";

pub fn write_matrix(w: &mut impl Write, m: &F2Matrix) -> io::Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&(m.rows() as u64).to_le_bytes())?;
    w.write_all(&(m.cols() as u64).to_le_bytes())?;
    for r in 0..m.rows() {
        for word in m.row(r) {
            w.write_all(&word.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn read_matrix(r: &mut impl Read) -> io::Result<F2Matrix> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(io::Error::new(io::ErrorKind::InvalidData, "bad matrix magic"));
    }
    let mut buf8 = [0u8; 8];
    r.read_exact(&mut buf8)?;
    let rows = u64::from_le_bytes(buf8) as usize;
    r.read_exact(&mut buf8)?;
    let cols = u64::from_le_bytes(buf8) as usize;
    let mut m = F2Matrix::zero(rows, cols);
    let words = cols.div_ceil(64);
    for i in 0..rows {
        for wi in 0..words {
            r.read_exact(&mut buf8)?;
            m.row_mut(i)[wi] = u64::from_le_bytes(buf8);
        }
    }
    Ok(m)
}

/// Textual 0/1 grid (one row per line) for small fixtures.
pub fn matrix_grid(m: &F2Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(if m.get(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn parse_grid(s: &str) -> Option<F2Matrix> {
    let lines: Vec<&str> = s.lines().filter(|l| !l.trim().is_empty()).collect();
    let rows = lines.len();
    let cols = lines.first()?.trim().len();
    let mut m = F2Matrix::zero(rows, cols);
    for (i, line) in lines.iter().enumerate() {
        let line = line.trim();
        if line.len() != cols {
            return None;
        }
        for (j, c) in line.chars().enumerate() {
            match c {
                '1' => m.set(i, j, true),
                '0' => {}
                _ => return None,
            }
        }
    }
    Some(m)
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn content_hash(rep: &RepModule) -> u64 {
    let mut h: u64 = fnv1a(BASIS_ORDER_VERSION.as_bytes());
    for g in &rep.gens {
        for r in 0..g.rows() {
            for w in g.row(r) {
                h ^= fnv1a(&w.to_le_bytes());
                h = h.wrapping_mul(0x100000001b3);
            }
        }
    }
    h
}

#[derive(Serialize, Deserialize, Debug)]
pub struct Sidecar {
    pub shape: String,
    pub n: usize,
    pub dim: usize,
    pub num_gens: usize,
    pub basis_order: String,
    pub hash: String,
}

fn cache_stem(dir: &Path, shape: &Partition) -> PathBuf {
    let key = fnv1a(format!("{}|{}", shape.display(), BASIS_ORDER_VERSION).as_bytes());
    dir.join(format!("rep-{key:016x}"))
}

pub fn store_rep(dir: &Path, shape: &Partition, rep: &RepModule) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let stem = cache_stem(dir, shape);
    let bin = stem.with_extension("bin");
    let mut w = io::BufWriter::new(fs::File::create(&bin)?);
    for g in &rep.gens {
        write_matrix(&mut w, g)?;
    }
    w.flush()?;
    let side = Sidecar {
        shape: shape.display(),
        n: rep.n,
        dim: rep.dim,
        num_gens: rep.gens.len(),
        basis_order: BASIS_ORDER_VERSION.to_string(),
        hash: format!("{:016x}", content_hash(rep)),
    };
    fs::write(
        stem.with_extension("json"),
        serde_json::to_string_pretty(&side)?,
    )?;
    Ok(bin)
}

pub fn load_rep(dir: &Path, shape: &Partition) -> Option<RepModule> {
    let stem = cache_stem(dir, shape);
    let side: Sidecar = serde_json::from_str(&fs::read_to_string(stem.with_extension("json")).ok()?).ok()?;
    if side.shape != shape.display() || side.basis_order != BASIS_ORDER_VERSION {
        return None;
    }
    let mut r = io::BufReader::new(fs::File::open(stem.with_extension("bin")).ok()?);
    let mut gens = Vec::with_capacity(side.num_gens);
    for _ in 0..side.num_gens {
        let m = read_matrix(&mut r).ok()?;
        if m.rows() != side.dim || m.cols() != side.dim {
            return None;
        }
        gens.push(m);
    }
    let rep = RepModule {
        n: side.n,
        dim: side.dim,
        gens,
        label: format!("S^({})", side.shape),
    };
    if format!("{:016x}", content_hash(&rep)) != side.hash {
        return None;
    }
    Some(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use specht_core::rep::rep_matrices;

    #[test]
    fn matrix_binary_round_trip() {
        let shape = Partition::parse("3,2").unwrap();
        let rep = rep_matrices(&shape).unwrap();
        for g in &rep.gens {
            let mut buf = Vec::new();
            write_matrix(&mut buf, g).unwrap();
            let back = read_matrix(&mut buf.as_slice()).unwrap();
            assert_eq!(g, &back);
        }
    }

    #[test]
    fn grid_round_trip() {
        let rep = rep_matrices(&Partition::parse("3,1").unwrap()).unwrap();
        let g = &rep.gens[1];
        let back = parse_grid(&matrix_grid(g)).unwrap();
        assert_eq!(g, &back);
        assert!(parse_grid("01\n2").is_none());
    }

    #[test]
    fn rep_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let shape = Partition::parse("4,2").unwrap();
        let rep = rep_matrices(&shape).unwrap();
        assert!(load_rep(dir.path(), &shape).is_none());
        store_rep(dir.path(), &shape, &rep).unwrap();
        let back = load_rep(dir.path(), &shape).unwrap();
        assert_eq!(back.gens, rep.gens);
        assert_eq!(back.n, rep.n);
        // other shapes miss
        assert!(load_rep(dir.path(), &Partition::parse("5,1").unwrap()).is_none());
        // corrupted payload is rejected by the content hash
        let stem = dir
            .path()
            .read_dir()
            .unwrap()
            .filter_map(|e| e.ok())
            .find(|e| e.path().extension().is_some_and(|x| x == "bin"))
            .unwrap()
            .path();
        let mut bytes = fs::read(&stem).unwrap();
        let last = bytes.len() - 1;
        bytes[last] ^= 1;
        fs::write(&stem, bytes).unwrap();
        assert!(load_rep(dir.path(), &shape).is_none());
    }
}
