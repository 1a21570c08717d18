//! OEIS b-file client with bundled offline fixtures and a disk cache.
//!
//! A b-file is plain text, one `index value` pair per line, `#` lines
//! ignored. Snapshots of A034943 and A095263 ship with the crate so the
//! whole test suite runs without network access; online fetches cache
//! their result under the directory named by `POSCOMP_OEIS_CACHE` (or a
//! default under the system temp directory) and fall back to the
//! fixture when the network fails.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use num_bigint::BigInt;
use thiserror::Error;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "POSCOMP_OEIS_CACHE";

/// Default network timeout for b-file fetches.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(10);

const FIXTURES: &[(&str, &str)] = &[
    ("A034943", include_str!("fixtures/b034943.txt")),
    ("A095263", include_str!("fixtures/b095263.txt")),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OeisError {
    #[error("'{0}' is not an OEIS id (expected 'A' followed by 6 digits)")]
    BadId(String),
    #[error("no terms available for {id}: {reason}")]
    Unavailable { id: String, reason: String },
    #[error("malformed b-file line {line}: {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("b-file for {id} contains no terms")]
    EmptyBFile { id: String },
    #[error("no shift with |s| <= {max_shift} matches at least {needed} terms (best: {best} at shift {best_shift})")]
    NoAlignment {
        max_shift: i64,
        needed: usize,
        best: usize,
        best_shift: i64,
    },
}

/// Where a [`SequenceRecord`]'s terms came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Network,
    Cache,
    Fixture,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Network => "network",
            Source::Cache => "cache",
            Source::Fixture => "fixture",
        })
    }
}

/// A parsed b-file: the sequence id, the index of the first term, and
/// the terms themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: String,
    pub offset: i64,
    pub terms: Vec<BigInt>,
    pub source: Source,
}

fn check_id(id: &str) -> Result<(), OeisError> {
    let ok = id.len() == 7
        && id.starts_with('A')
        && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(OeisError::BadId(id.to_string()))
    }
}

fn parse_bfile(id: &str, text: &str, source: Source) -> Result<SequenceRecord, OeisError> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let entry = (|| {
            let index: i64 = fields.next()?.parse().ok()?;
            let value: BigInt = fields.next()?.parse().ok()?;
            if fields.next().is_some() {
                return None;
            }
            Some((index, value))
        })();
        let Some((index, value)) = entry else {
            return Err(OeisError::MalformedLine {
                line: lineno + 1,
                text: line.to_string(),
            });
        };
        match offset {
            None => offset = Some(index),
            Some(first) => {
                // indices must stay consecutive
                if index != first + terms.len() as i64 {
                    return Err(OeisError::MalformedLine {
                        line: lineno + 1,
                        text: line.to_string(),
                    });
                }
            }
        }
        terms.push(value);
    }
    if terms.is_empty() {
        return Err(OeisError::EmptyBFile { id: id.to_string() });
    }
    Ok(SequenceRecord {
        id: id.to_string(),
        offset: offset.expect("terms imply an offset"),
        terms,
        source,
    })
}

fn fixture(id: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(fid, _)| *fid == id).map(|(_, text)| *text)
}

fn cache_dir() -> PathBuf {
    match std::env::var_os(CACHE_DIR_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => std::env::temp_dir().join("poscomp-oeis-cache"),
    }
}

fn cache_path(id: &str) -> PathBuf {
    cache_dir().join(format!("b{}.txt", &id[1..]))
}

/// Store via a temp file and rename so concurrent readers never see a
/// half-written cache entry.
fn write_cache(id: &str, text: &str) {
    let dir = cache_dir();
    if fs::create_dir_all(&dir).is_err() {
        return;
    }
    let tmp = dir.join(format!(".b{}.txt.tmp-{}", &id[1..], std::process::id()));
    let ok = fs::File::create(&tmp)
        .and_then(|mut f| f.write_all(text.as_bytes()))
        .is_ok();
    if ok {
        let _ = fs::rename(&tmp, cache_path(id));
    } else {
        let _ = fs::remove_file(&tmp);
    }
}

fn http_get(id: &str, timeout: Duration) -> Result<String, String> {
    let digits = &id[1..];
    let url = format!("https://oeis.org/{id}/b{digits}.txt");
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(timeout))
        .build()
        .into();
    let mut response = agent.get(&url).call().map_err(|e| e.to_string())?;
    response
        .body_mut()
        .read_to_string()
        .map_err(|e| e.to_string())
}

/// Fetch the b-file of `id` with a custom network timeout.
///
/// Offline: bundled fixture only. Online: disk cache first, then the
/// network (writing the cache on success), then the fixture as a last
/// resort.
pub fn fetch_with_timeout(
    id: &str,
    offline: bool,
    timeout: Duration,
) -> Result<SequenceRecord, OeisError> {
    check_id(id)?;
    if offline {
        let text = fixture(id).ok_or_else(|| OeisError::Unavailable {
            id: id.to_string(),
            reason: "no bundled fixture".to_string(),
        })?;
        return parse_bfile(id, text, Source::Fixture);
    }
    if let Ok(text) = fs::read_to_string(cache_path(id)) {
        if let Ok(record) = parse_bfile(id, &text, Source::Cache) {
            return Ok(record);
        }
    }
    match http_get(id, timeout) {
        Ok(text) => {
            let record = parse_bfile(id, &text, Source::Network)?;
            write_cache(id, &text);
            Ok(record)
        }
        Err(network_error) => match fixture(id) {
            Some(text) => parse_bfile(id, text, Source::Fixture),
            None => Err(OeisError::Unavailable {
                id: id.to_string(),
                reason: format!("network failed ({network_error}) and no fixture exists"),
            }),
        },
    }
}

/// [`fetch_with_timeout`] with the default 10 second timeout.
pub fn fetch(id: &str, offline: bool) -> Result<SequenceRecord, OeisError> {
    fetch_with_timeout(id, offline, DEFAULT_TIMEOUT)
}

/// How a computed sequence lines up against a record's terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    /// `computed[i]` was compared against `terms[i + shift]` (0-based).
    pub shift: i64,
    /// Length of the run of exact agreement from the first overlapping
    /// index.
    pub matched: usize,
    /// First disagreeing computed index (0-based), if the overlap ended
    /// in a mismatch rather than running out of terms.
    pub first_mismatch: Option<usize>,
}

const MAX_SHIFT: i64 = 3;
const MIN_MATCHES: usize = 5;

fn agreement(computed: &[BigInt], terms: &[BigInt], shift: i64) -> (usize, Option<usize>) {
    let start = if shift < 0 { (-shift) as usize } else { 0 };
    let mut matched = 0;
    for i in start..computed.len() {
        let t = i as i64 + shift;
        let Some(term) = terms.get(t as usize) else {
            return (matched, None);
        };
        if term != &computed[i] {
            return (matched, Some(i));
        }
        matched += 1;
    }
    (matched, None)
}

/// Find the shift `|s| <= 3` that maximizes exact agreement between the
/// computed terms (first term = index 1 of the sequence) and the
/// record's term list. Ties prefer the smaller |shift|, then the smaller
/// shift. At least 5 matching terms are required.
pub fn align(record: &SequenceRecord, computed: &[BigInt]) -> Result<Alignment, OeisError> {
    let mut best: Option<Alignment> = None;
    for shift in -MAX_SHIFT..=MAX_SHIFT {
        let (matched, first_mismatch) = agreement(computed, &record.terms, shift);
        let candidate = Alignment {
            shift,
            matched,
            first_mismatch,
        };
        let better = match &best {
            None => true,
            Some(b) => {
                candidate.matched > b.matched
                    || (candidate.matched == b.matched
                        && (candidate.shift.abs(), candidate.shift) < (b.shift.abs(), b.shift))
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    let best = best.expect("shift range is non-empty");
    if best.matched < MIN_MATCHES {
        return Err(OeisError::NoAlignment {
            max_shift: MAX_SHIFT,
            needed: MIN_MATCHES,
            best: best.matched,
            best_shift: best.shift,
        });
    }
    Ok(best)
}

/// The number of matched terms an alignment must reach to count as
/// conforming: 12, or everything available when fewer overlap.
pub fn required_matches(record: &SequenceRecord, computed: &[BigInt]) -> usize {
    12.min(record.terms.len()).min(computed.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn fixture_records_parse() {
        let rec = fetch("A034943", true).unwrap();
        assert_eq!(rec.source, Source::Fixture);
        assert_eq!(rec.offset, 0);
        assert!(rec.terms.len() >= 20);
        assert_eq!(rec.terms[..5], ints(&[1, 1, 1, 2, 5])[..]);
        let rec = fetch("A095263", true).unwrap();
        assert_eq!(rec.offset, 1);
        assert_eq!(rec.terms[..5], ints(&[1, 3, 7, 16, 37])[..]);
    }

    #[test]
    fn unknown_and_malformed_ids() {
        assert!(matches!(
            fetch("A000000", true),
            Err(OeisError::Unavailable { .. })
        ));
        assert_eq!(fetch("X123456", true), Err(OeisError::BadId("X123456".into())));
        assert_eq!(fetch("A12345", true), Err(OeisError::BadId("A12345".into())));
    }

    #[test]
    fn malformed_lines_are_located() {
        let err = parse_bfile("A000001", "1 1\n2 2\n3 x\n", Source::Fixture).unwrap_err();
        assert_eq!(
            err,
            OeisError::MalformedLine {
                line: 3,
                text: "3 x".to_string()
            }
        );
        assert!(parse_bfile("A000001", "# only comments\n", Source::Fixture).is_err());
    }

    #[test]
    fn align_finds_the_even_shift() {
        let rec = fetch("A034943", true).unwrap();
        let computed = ints(&[1, 2, 5, 12, 28, 65, 151, 351, 816, 1897, 4410, 10252]);
        let a = align(&rec, &computed).unwrap();
        // e(n) sits two list positions into the fixture data
        assert_eq!(a.shift, 2);
        assert_eq!(a.matched, 12);
        assert_eq!(a.first_mismatch, None);
    }

    #[test]
    fn align_rejects_garbage() {
        let rec = fetch("A034943", true).unwrap();
        let zeros = ints(&[0; 12]);
        assert!(matches!(align(&rec, &zeros), Err(OeisError::NoAlignment { .. })));
    }

    #[test]
    fn alignment_shifts_negate_when_roles_swap() {
        let rec = fetch("A095263", true).unwrap();
        let head: Vec<BigInt> = rec.terms[2..14].to_vec();
        let forward = align(&rec, &head).unwrap();
        assert_eq!(forward.shift, 2);
        let synthetic = SequenceRecord {
            id: "A095263".to_string(),
            offset: 1,
            terms: head,
            source: Source::Fixture,
        };
        let reverse = align(&synthetic, &rec.terms).unwrap();
        assert_eq!(reverse.shift, -forward.shift);
    }

    #[test]
    fn cache_roundtrip() {
        let dir = std::env::temp_dir().join(format!("poscomp-oeis-test-{}", std::process::id()));
        std::env::set_var(CACHE_DIR_ENV, &dir);
        write_cache("A034943", "0 1\n1 1\n2 1\n3 2\n4 5\n");
        let text = fs::read_to_string(cache_path("A034943")).unwrap();
        assert_eq!(text, "0 1\n1 1\n2 1\n3 2\n4 5\n");
        let rec = parse_bfile("A034943", &text, Source::Cache).unwrap();
        assert_eq!(rec.terms.len(), 5);
        std::env::remove_var(CACHE_DIR_ENV);
        let _ = fs::remove_dir_all(dir);
    }
}
