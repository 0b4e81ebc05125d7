//! Breadth-first closure over generators, with an optional on-disk cache.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

use super::group::MatGroup;
use super::mat::Mat;

/// All elements of a group as packed codes.
#[derive(Debug, Clone)]
pub enum CodeSet {
    Narrow { n: usize, p: u64, codes: FxHashSet<u64> },
    Wide { n: usize, p: u64, codes: FxHashSet<u128> },
}

impl CodeSet {
    pub fn len(&self) -> usize {
        match self {
            CodeSet::Narrow { codes, .. } => codes.len(),
            CodeSet::Wide { codes, .. } => codes.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, g: &Mat) -> bool {
        match self {
            CodeSet::Narrow { codes, .. } => codes.contains(&(g.code() as u64)),
            CodeSet::Wide { codes, .. } => codes.contains(&g.code()),
        }
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = Mat> + '_> {
        match self {
            CodeSet::Narrow { n, p, codes } => {
                Box::new(codes.iter().map(move |&c| Mat::decode(c as u128, *n, *p)))
            }
            CodeSet::Wide { n, p, codes } => {
                Box::new(codes.iter().map(move |&c| Mat::decode(c, *n, *p)))
            }
        }
    }

    fn sorted_codes(&self) -> Vec<u128> {
        let mut v: Vec<u128> = match self {
            CodeSet::Narrow { codes, .. } => codes.iter().map(|&c| c as u128).collect(),
            CodeSet::Wide { codes, .. } => codes.iter().copied().collect(),
        };
        v.sort_unstable();
        v
    }
}

fn code_bits(n: usize, p: u64) -> f64 {
    (n * n) as f64 * (p as f64).log2()
}

/// Enumerate every element by BFS closure. Fails with a capacity error when the
/// order exceeds `cap` or the encoding would not fit in 128 bits.
pub fn enumerate(group: &MatGroup, cap: u128, cache: Option<&EnumCache>) -> Result<CodeSet> {
    let (n, p) = (group.n(), group.p());
    let bits = code_bits(n, p);
    if bits > 128.0 {
        return Err(Error::Capacity {
            what: format!("element encoding for n={n}, p={p}"),
            needed: bits.ceil() as u128,
            cap: 128,
        });
    }
    let order = group.order();
    if order > cap {
        return Err(Error::Capacity {
            what: "enumeration".into(),
            needed: order,
            cap,
        });
    }
    if let Some(c) = cache {
        if let Some(set) = c.load(group)? {
            return Ok(set);
        }
    }
    let set = if bits <= 64.0 {
        CodeSet::Narrow {
            n,
            p,
            codes: bfs(group, order, |m| m.code() as u64, |c| Mat::decode(c as u128, n, p)),
        }
    } else {
        CodeSet::Wide {
            n,
            p,
            codes: bfs(group, order, |m| m.code(), |c| Mat::decode(c, n, p)),
        }
    };
    if let Some(c) = cache {
        c.store(group, &set)?;
    }
    Ok(set)
}

fn bfs<C: Copy + Eq + std::hash::Hash>(
    group: &MatGroup,
    order: u128,
    enc: impl Fn(&Mat) -> C,
    dec: impl Fn(C) -> Mat,
) -> FxHashSet<C> {
    let mut seen = FxHashSet::default();
    seen.reserve(order as usize);
    let mut queue: Vec<C> = Vec::with_capacity(order as usize);
    let id = enc(&group.identity());
    seen.insert(id);
    queue.push(id);
    let mut head = 0;
    while head < queue.len() {
        let x = dec(queue[head]);
        head += 1;
        for g in group.gens() {
            let c = enc(&x.mul(g));
            if seen.insert(c) {
                queue.push(c);
            }
        }
    }
    seen
}

const MAGIC: &[u8; 4] = b"PFEC";
const VERSION: u32 = 1;

/// Directory of cached enumeration tables keyed by field, dimension and generators.
#[derive(Debug, Clone)]
pub struct EnumCache {
    dir: PathBuf,
}

fn fnv1a(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn generator_hash(group: &MatGroup) -> u64 {
    fnv1a(
        group
            .gens()
            .iter()
            .flat_map(|g| g.code().to_le_bytes())
            .collect::<Vec<u8>>(),
    )
}

impl EnumCache {
    pub fn new(dir: impl AsRef<Path>) -> Result<EnumCache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(EnumCache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    fn path(&self, group: &MatGroup) -> PathBuf {
        self.dir.join(format!(
            "pfec-{}-{}-{:016x}.bin",
            group.p(),
            group.n(),
            generator_hash(group)
        ))
    }

    fn store(&self, group: &MatGroup, set: &CodeSet) -> Result<()> {
        let wide = matches!(set, CodeSet::Wide { .. });
        let mut buf = Vec::with_capacity(32 + set.len() * if wide { 16 } else { 8 });
        buf.extend_from_slice(MAGIC);
        buf.extend_from_slice(&VERSION.to_le_bytes());
        buf.extend_from_slice(&(group.p() as u32).to_le_bytes());
        buf.extend_from_slice(&(group.n() as u32).to_le_bytes());
        buf.extend_from_slice(&generator_hash(group).to_le_bytes());
        buf.extend_from_slice(&(set.len() as u64).to_le_bytes());
        buf.push(if wide { 16 } else { 8 });
        for c in set.sorted_codes() {
            if wide {
                buf.extend_from_slice(&c.to_le_bytes());
            } else {
                buf.extend_from_slice(&(c as u64).to_le_bytes());
            }
        }
        let mut f = fs::File::create(self.path(group))?;
        f.write_all(&buf)?;
        Ok(())
    }

    /// Load a table if one matches this group; mismatched headers are ignored.
    fn load(&self, group: &MatGroup) -> Result<Option<CodeSet>> {
        let path = self.path(group);
        let Ok(mut f) = fs::File::open(&path) else {
            return Ok(None);
        };
        let mut buf = Vec::new();
        f.read_to_end(&mut buf)?;
        if buf.len() < 33 || &buf[0..4] != MAGIC {
            return Ok(None);
        }
        let u32_at = |o: usize| u32::from_le_bytes(buf[o..o + 4].try_into().unwrap());
        let u64_at = |o: usize| u64::from_le_bytes(buf[o..o + 8].try_into().unwrap());
        if u32_at(4) != VERSION
            || u32_at(8) as u64 != group.p()
            || u32_at(12) as usize != group.n()
            || u64_at(16) != generator_hash(group)
        {
            return Ok(None);
        }
        let count = u64_at(24) as usize;
        let width = buf[32] as usize;
        if buf.len() != 33 + count * width || count as u128 != group.order() {
            return Ok(None);
        }
        let (n, p) = (group.n(), group.p());
        let body = &buf[33..];
        let set = match width {
            8 => CodeSet::Narrow {
                n,
                p,
                codes: body
                    .chunks_exact(8)
                    .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
                    .collect(),
            },
            16 => CodeSet::Wide {
                n,
                p,
                codes: body
                    .chunks_exact(16)
                    .map(|c| u128::from_le_bytes(c.try_into().unwrap()))
                    .collect(),
            },
            _ => return Ok(None),
        };
        Ok(Some(set))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::preset;

    fn group(name: &str, p: u64) -> MatGroup {
        MatGroup::from_int(&preset(name).unwrap().system.reflection_matrices(), p).unwrap()
    }

    #[test]
    fn bfs_counts() {
        assert_eq!(enumerate(&group("[inf]", 7), 1000, None).unwrap().len(), 14);
        assert_eq!(enumerate(&group("[3,6]", 5), 1000, None).unwrap().len(), 300);
        let trivial = MatGroup::new(3, 5, vec![]).unwrap();
        let set = enumerate(&trivial, 10, None).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&Mat::identity(3, 5)));
    }

    #[test]
    fn cap_is_enforced() {
        match enumerate(&group("[3,6]", 5), 100, None) {
            Err(Error::Capacity { needed: 300, cap: 100, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("pfec-test-{}", std::process::id()));
        let cache = EnumCache::new(&dir).unwrap();
        let g = group("[3,6]", 7);
        let a = enumerate(&g, 10_000, Some(&cache)).unwrap();
        let b = enumerate(&g, 10_000, Some(&cache)).unwrap();
        assert_eq!(a.sorted_codes(), b.sorted_codes());
        let _ = fs::remove_dir_all(dir);
    }
}
