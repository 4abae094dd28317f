//! Cross-checks the crate's generators against OEIS b-files.
//!
//! A b-file is plain text, one `n a(n)` pair per line, `#` comments
//! allowed. Files live in a cache directory; the environment variable
//! [`CACHE_ENV`] overrides any flag, the flag overrides the default
//! user cache path. Network fetch is strictly opt-in and failures
//! degrade to an explicit status, never a silent pass.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use motzkin::{motzkin, special, SpecialKind};

/// Overrides the cache directory when set.
pub const CACHE_ENV: &str = "MOTZKIN_OEIS_CACHE";

/// The four sequences the toolkit can be checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqId {
    /// Motzkin numbers.
    A001006,
    /// 3^n + 2, the range minima family.
    A168607,
    /// 2: then 2*3^(n-1) + 1, the mirror minima family (offset by one
    /// against our indexing, which the comparison detects).
    A052919,
    /// 2^n - 1.
    A000225,
}

impl SeqId {
    pub const ALL: [SeqId; 4] = [
        SeqId::A001006,
        SeqId::A168607,
        SeqId::A052919,
        SeqId::A000225,
    ];

    pub fn parse(s: &str) -> Option<SeqId> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A001006" => Some(SeqId::A001006),
            "A168607" => Some(SeqId::A168607),
            "A052919" => Some(SeqId::A052919),
            "A000225" => Some(SeqId::A000225),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            SeqId::A001006 => "A001006",
            SeqId::A168607 => "A168607",
            SeqId::A052919 => "A052919",
            SeqId::A000225 => "A000225",
        }
    }

    /// What our side of the comparison computes.
    pub fn generator_name(self) -> &'static str {
        match self {
            SeqId::A001006 => "motzkin(n)",
            SeqId::A168607 => "3^n + 2",
            SeqId::A052919 => "2*3^n + 1",
            SeqId::A000225 => "2^n - 1",
        }
    }

    pub fn bfile_name(self) -> String {
        format!("b{}.txt", &self.tag()[1..])
    }

    pub fn url(self) -> String {
        format!("https://oeis.org/{}/{}", self.tag(), self.bfile_name())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("no cached b-file for {0} (looked for {1}); vendor it or pass --fetch")]
    CacheMissing(&'static str, PathBuf),
    #[error("network unavailable fetching {0}: {1}")]
    NetworkUnavailable(&'static str, String),
    #[error("b-file line {line}: cannot parse {text:?}")]
    BadBFile { line: usize, text: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Parses b-file text into (n, a(n)) pairs.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigUint)>, OeisError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let pair = (
            it.next().and_then(|t| t.parse::<i64>().ok()),
            it.next().and_then(|t| t.parse::<BigUint>().ok()),
        );
        match pair {
            (Some(n), Some(a)) if it.next().is_none() => out.push((n, a)),
            _ => {
                return Err(OeisError::BadBFile {
                    line: i + 1,
                    text: raw.to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// Cache directory resolution: environment variable, then the flag,
/// then `$XDG_CACHE_HOME/motzkin/oeis` (or `~/.cache/motzkin/oeis`).
pub fn cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Ok(dir) = std::env::var(CACHE_ENV) {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    if let Some(dir) = flag {
        return dir.to_path_buf();
    }
    let base = std::env::var("XDG_CACHE_HOME")
        .ok()
        .filter(|s| !s.is_empty())
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            let home = std::env::var("HOME").unwrap_or_else(|_| ".".into());
            Path::new(&home).join(".cache")
        });
    base.join("motzkin").join("oeis")
}

/// Our terms g(0..=n_max) for the sequence's subject.
pub fn generator_terms(id: SeqId, n_max: usize) -> Vec<BigUint> {
    (0..=n_max)
        .map(|n| match id {
            SeqId::A001006 => motzkin(n),
            SeqId::A168607 => special(SpecialKind::E, n).value,
            SeqId::A052919 => special(SpecialKind::Ebar, n).value,
            SeqId::A000225 => BigUint::from(2u32).pow(n as u32) - 1u32,
        })
        .collect()
}

/// Outcome of one comparison.
#[derive(Debug, Clone)]
pub struct OeisReport {
    pub id: SeqId,
    /// b-file index minus generator index on the agreeing alignment.
    pub shift: i64,
    /// Terms actually compared.
    pub compared: usize,
    pub agrees: bool,
    /// On disagreement: (generator n, b-file term, generator term).
    pub first_divergence: Option<(usize, String, String)>,
}

/// Compares generator terms against a parsed b-file, trying small
/// index shifts to absorb offset conventions. Alignment needs at least
/// ten overlapping terms; shift 0 wins ties.
pub fn compare(id: SeqId, bfile: &[(i64, BigUint)], n_max: usize) -> OeisReport {
    let table: BTreeMap<i64, &BigUint> = bfile.iter().map(|(n, a)| (*n, a)).collect();
    let ours = generator_terms(id, n_max);

    let mut fallback: Option<OeisReport> = None;
    for shift in [0i64, 1, -1, 2, -2] {
        let mut compared = 0;
        let mut divergence = None;
        for (n, g) in ours.iter().enumerate() {
            if let Some(a) = table.get(&(n as i64 + shift)) {
                compared += 1;
                if *a != g && divergence.is_none() {
                    divergence = Some((n, a.to_string(), g.to_string()));
                }
            }
        }
        let report = OeisReport {
            id,
            shift,
            compared,
            agrees: compared >= 10 && divergence.is_none(),
            first_divergence: divergence,
        };
        if report.agrees {
            return report;
        }
        if shift == 0 {
            fallback = Some(report);
        }
    }
    fallback.expect("shift 0 is always attempted")
}

/// Reads the cached b-file and compares. Missing cache is an error so
/// callers can surface an explicit skip status.
pub fn check_cached(id: SeqId, dir: &Path, n_max: usize) -> Result<OeisReport, OeisError> {
    let path = dir.join(id.bfile_name());
    if !path.exists() {
        return Err(OeisError::CacheMissing(id.tag(), path));
    }
    let text = fs::read_to_string(&path)?;
    Ok(compare(id, &parse_bfile(&text)?, n_max))
}

/// Downloads the b-file into the cache. Any transport failure is
/// reported as NetworkUnavailable; the caller decides whether a stale
/// cache can stand in.
pub fn fetch_to_cache(id: SeqId, dir: &Path) -> Result<PathBuf, OeisError> {
    let body = ureq::get(&id.url())
        .call()
        .and_then(|mut res| res.body_mut().read_to_string())
        .map_err(|e| OeisError::NetworkUnavailable(id.tag(), e.to_string()))?;
    // Validate before writing so a proxy error page cannot poison the
    // cache.
    parse_bfile(&body)?;
    fs::create_dir_all(dir)?;
    let path = dir.join(id.bfile_name());
    fs::write(&path, body)?;
    Ok(path)
}
