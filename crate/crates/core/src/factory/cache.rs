//! Plain-text curve cache: one `p:q<TAB>degree<TAB>equation` line per curve.

use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use super::curve::annihilates;
use crate::chebyshev::check_indices;
use crate::poly::HomoPoly3;
use crate::{Error, Result};

/// Entries that passed verification and lines that did not.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CacheLoad {
    pub entries: Vec<((u32, u32), HomoPoly3)>,
    pub rejected: Vec<String>,
}

pub fn render_cache(entries: &[((u32, u32), HomoPoly3)]) -> String {
    let mut sorted: Vec<_> = entries.iter().collect();
    sorted.sort_by_key(|(k, _)| *k);
    sorted
        .into_iter()
        .map(|((p, q), f)| format!("{p}:{q}\t{}\t{f}\n", f.degree()))
        .collect()
}

fn parse_line(line: &str) -> Result<((u32, u32), HomoPoly3)> {
    let bad = || Error::Parse(format!("malformed cache line `{line}`"));
    let mut fields = line.split('\t');
    let (Some(key), Some(degree), Some(eq), None) = (fields.next(), fields.next(), fields.next(), fields.next()) else {
        return Err(bad());
    };
    let (p, q) = key.split_once(':').ok_or_else(bad)?;
    let p: u32 = p.parse().map_err(|_| bad())?;
    let q: u32 = q.parse().map_err(|_| bad())?;
    let degree: u32 = degree.parse().map_err(|_| bad())?;
    check_indices(p, q)?;
    let f: HomoPoly3 = eq.parse()?;
    if f.degree() != degree || degree != p + q - 1 || !f.is_canonical() || !annihilates(&f, p, q)? {
        return Err(Error::Invariant(format!("cache entry for {p}:{q} fails verification")));
    }
    Ok(((p, q), f))
}

/// Parses cache text, keeping only entries with the right degree, canonical
/// form and `f ∘ Γ = 0`.
pub fn parse_cache(text: &str) -> CacheLoad {
    let mut out = CacheLoad::default();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        match parse_line(line) {
            Ok(entry) => out.entries.push(entry),
            Err(_) => out.rejected.push(line.to_string()),
        }
    }
    out
}

/// A missing file is an empty cache.
pub fn load_cache(path: &Path) -> Result<CacheLoad> {
    match fs::read_to_string(path) {
        Ok(text) => Ok(parse_cache(&text)),
        Err(e) if e.kind() == ErrorKind::NotFound => Ok(CacheLoad::default()),
        Err(e) => Err(Error::Io(format!("{}: {e}", path.display()))),
    }
}

/// Writes through a sibling temporary file and a rename.
pub fn save_cache(path: &Path, entries: &[((u32, u32), HomoPoly3)]) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, render_cache(entries)).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}
