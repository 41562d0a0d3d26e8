//! OEIS b-files: parsing, bundled fixtures, an optional download cache and
//! prefix cross-checks with explicit index maps.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use invpat_core::counting;
use invpat_core::Pattern;
use num_bigint::BigUint;
use serde_json::json;

use crate::verify::VerdictReport;
use crate::{parallel, Error, Result};

/// Parsed b-file: index to term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub terms: BTreeMap<i64, BigUint>,
}

impl BFile {
    pub fn get(&self, i: i64) -> Option<&BigUint> {
        self.terms.get(&i)
    }
}

/// Canonical `A` number: `a6318` and `A006318` both give `A006318`.
pub fn normalize_id(id: &str) -> Result<String> {
    let digits = id.trim().trim_start_matches(['A', 'a']);
    if digits.is_empty() || digits.len() > 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Usage(format!("not an OEIS id: {id:?}")));
    }
    Ok(format!("A{digits:0>6}"))
}

/// Parses `n a(n)` lines; blank lines and `#` comments are skipped.
pub fn parse_bfile(id: &str, text: &str) -> Result<BFile> {
    let mut terms = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Parse(format!("{id} b-file line {}: {line:?}", lineno + 1));
        let mut it = line.split_whitespace();
        let (Some(i), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        let i: i64 = i.parse().map_err(|_| bad())?;
        let v: BigUint = v.parse().map_err(|_| bad())?;
        terms.insert(i, v);
    }
    if terms.is_empty() {
        return Err(Error::Parse(format!("{id} b-file has no terms")));
    }
    Ok(BFile { id: id.to_string(), terms })
}

const BUNDLED: [(&str, &str); 11] = [
    ("A000079", include_str!("../fixtures/b000079.txt")),
    ("A000110", include_str!("../fixtures/b000110.txt")),
    ("A000111", include_str!("../fixtures/b000111.txt")),
    ("A001519", include_str!("../fixtures/b001519.txt")),
    ("A006318", include_str!("../fixtures/b006318.txt")),
    ("A113227", include_str!("../fixtures/b113227.txt")),
    ("A200753", include_str!("../fixtures/b200753.txt")),
    ("A263777", include_str!("../fixtures/b263777.txt")),
    ("A263778", include_str!("../fixtures/b263778.txt")),
    ("A263779", include_str!("../fixtures/b263779.txt")),
    ("A263780", include_str!("../fixtures/b263780.txt")),
];

/// The bundled copy of a b-file, if there is one.
pub fn bundled(id: &str) -> Option<BFile> {
    let id = normalize_id(id).ok()?;
    BUNDLED.iter().find(|(k, _)| *k == id).map(|(k, text)| parse_bfile(k, text).expect("bundled fixture parses"))
}

/// Where b-files come from.
#[derive(Debug, Clone)]
pub enum Source {
    /// Bundled fixtures only.
    Offline,
    /// Cache directory first, then bundled fixtures; downloads into the
    /// cache when `fetch` is set.
    Cache { dir: PathBuf, fetch: bool },
}

/// `$INVPAT_CACHE`, else `$HOME/.cache/invpat`, else a temp directory.
pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("INVPAT_CACHE") {
        return PathBuf::from(dir);
    }
    match std::env::var_os("HOME") {
        Some(home) => Path::new(&home).join(".cache").join("invpat"),
        None => std::env::temp_dir().join("invpat"),
    }
}

fn bfile_name(id: &str) -> String {
    format!("b{}.txt", &id[1..])
}

/// Standard b-file URL for an id.
pub fn bfile_url(id: &str) -> Result<String> {
    let id = normalize_id(id)?;
    Ok(format!("https://oeis.org/{id}/{}", bfile_name(&id)))
}

/// Downloads a b-file.
pub fn fetch(id: &str) -> Result<String> {
    let url = bfile_url(id)?;
    let fail = |reason: String| Error::Fetch { id: id.to_string(), reason };
    let mut resp = ureq::get(&url).call().map_err(|e| fail(e.to_string()))?;
    resp.body_mut().read_to_string().map_err(|e| fail(e.to_string()))
}

/// Loads a b-file from `source`.
pub fn load(id: &str, source: &Source) -> Result<BFile> {
    let id = normalize_id(id)?;
    if let Source::Cache { dir, fetch: want_fetch } = source {
        let path = dir.join(bfile_name(&id));
        if path.exists() {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::io(path.display().to_string(), e))?;
            return parse_bfile(&id, &text);
        }
        if *want_fetch {
            let text = fetch(&id)?;
            let parsed = parse_bfile(&id, &text)?;
            std::fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
            std::fs::write(&path, &text).map_err(|e| Error::io(path.display().to_string(), e))?;
            return Ok(parsed);
        }
    }
    bundled(&id).ok_or(Error::MissingSequence(id))
}

/// Compares `computed[n] == a(n + shift)` for every computed `n` whose
/// image index is in the b-file. Indices past the end of the b-file are
/// skipped; the report fails if nothing was compared.
pub fn crosscheck(label: &str, computed: &[(usize, BigUint)], bfile: &BFile, shift: i64) -> VerdictReport {
    let start = Instant::now();
    let n_min = computed.first().map_or(0, |c| c.0);
    let n_max = computed.last().map_or(0, |c| c.0);
    let mut r = VerdictReport::new(format!("oeis:{}:{label}", bfile.id), n_min, n_max);
    for (n, value) in computed {
        let index = *n as i64 + shift;
        let Some(expected) = bfile.get(index) else { continue };
        let pass = expected == value;
        r.record(*n, pass, format!("a({index}) = {expected}"), || {
            json!({ "id": bfile.id, "n": n, "index": index, "computed": value.to_string(), "expected": expected.to_string() })
        });
    }
    if r.per_n.is_empty() {
        r.record(n_min, false, "no overlapping terms", || json!({ "id": bfile.id, "reason": "no overlapping terms" }));
    }
    r.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    r
}

/// One declared correspondence `our(n) = A(n + shift)`.
#[derive(Debug, Clone, Copy)]
pub struct OffsetMap {
    pub id: &'static str,
    /// What is being counted.
    pub label: &'static str,
    pub shift: i64,
    pub n_min: usize,
    pub n_max: usize,
    pub compute: fn(usize) -> BigUint,
}

fn brute(p: &str, n: usize) -> BigUint {
    let pattern: Pattern = p.parse().expect("static pattern");
    parallel::count(n, &[pattern])
}

/// Every cross-check, each with its explicit index map.
pub const OFFSET_MAPS: [OffsetMap; 11] = [
    OffsetMap { id: "A001519", label: "I_n(012)", shift: 0, n_min: 1, n_max: 20, compute: counting::count_012 },
    OffsetMap { id: "A006318", label: "I_n(021)", shift: -1, n_min: 1, n_max: 20, compute: counting::count_021 },
    OffsetMap { id: "A000111", label: "I_n(000)", shift: 1, n_min: 1, n_max: 20, compute: counting::count_000 },
    OffsetMap { id: "A000079", label: "I_n(001)", shift: -1, n_min: 1, n_max: 20, compute: counting::count_001 },
    OffsetMap { id: "A000110", label: "I_n(011)", shift: 0, n_min: 1, n_max: 20, compute: counting::bell },
    OffsetMap { id: "A113227", label: "I_n(101)", shift: 0, n_min: 1, n_max: 10, compute: counting::count_101_110 },
    OffsetMap { id: "A200753", label: "I_n(102)", shift: 0, n_min: 1, n_max: 20, compute: counting::count_102 },
    OffsetMap { id: "A263777", label: "I_n(201)", shift: 0, n_min: 1, n_max: 12, compute: counting::count_201_210 },
    OffsetMap { id: "A263778", label: "I_n(120)", shift: 0, n_min: 1, n_max: 9, compute: |n| brute("120", n) },
    OffsetMap { id: "A263779", label: "I_n(010)", shift: 0, n_min: 1, n_max: 9, compute: |n| brute("010", n) },
    OffsetMap { id: "A263780", label: "I_n(100)", shift: 0, n_min: 1, n_max: 9, compute: |n| brute("100", n) },
];

/// Runs the declared cross-checks, all of them or only `only`.
pub fn run_crosschecks(source: &Source, only: Option<&str>) -> Result<Vec<VerdictReport>> {
    let only = only.map(normalize_id).transpose()?;
    let maps: Vec<&OffsetMap> = OFFSET_MAPS.iter().filter(|m| only.as_deref().is_none_or(|id| m.id == id)).collect();
    if maps.is_empty() {
        return Err(Error::MissingSequence(only.unwrap_or_default()));
    }
    maps.into_iter()
        .map(|m| {
            let start = Instant::now();
            let bfile = load(m.id, source)?;
            let computed: Vec<(usize, BigUint)> = (m.n_min..=m.n_max).map(|n| (n, (m.compute)(n))).collect();
            let mut r = crosscheck(m.label, &computed, &bfile, m.shift);
            r.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
            Ok(r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bfiles() {
        let b = parse_bfile("A000001", "# comment\n\n0 1\n1 1\n2 12345678901234567890123\n").unwrap();
        assert_eq!(b.terms.len(), 3);
        assert_eq!(b.get(2).unwrap().to_string(), "12345678901234567890123");
        assert!(parse_bfile("A1", "0 x").is_err());
        assert!(parse_bfile("A1", "0 1 2").is_err());
        assert!(parse_bfile("A1", "# nothing").is_err());
    }

    #[test]
    fn ids() {
        assert_eq!(normalize_id("a6318").unwrap(), "A006318");
        assert_eq!(normalize_id("A263777").unwrap(), "A263777");
        assert!(normalize_id("B12").is_err());
        assert_eq!(bfile_url("A110").unwrap(), "https://oeis.org/A000110/b000110.txt");
    }

    #[test]
    fn bundled_fixtures_all_load() {
        for m in OFFSET_MAPS {
            assert!(bundled(m.id).is_some(), "{}", m.id);
        }
        assert!(bundled("A000045").is_none());
    }

    #[test]
    fn mismatch_reports_first_index() {
        let b = parse_bfile("A000001", "1 1\n2 2\n3 6\n4 24\n").unwrap();
        let computed: Vec<_> = [1u32, 2, 5, 7].iter().enumerate().map(|(i, &v)| (i + 1, BigUint::from(v))).collect();
        let r = crosscheck("x", &computed, &b, 0);
        assert!(!r.passed());
        assert_eq!(r.counterexample.unwrap()["index"], 3);
    }

    #[test]
    fn cache_takes_priority_over_bundle() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("b000110.txt"), "0 1\n1 1\n2 3\n").unwrap();
        let src = Source::Cache { dir: dir.path().to_path_buf(), fetch: false };
        let b = load("A000110", &src).unwrap();
        assert_eq!(b.get(2).unwrap(), &BigUint::from(3u32));
        assert_eq!(load("A000111", &src).unwrap(), bundled("A000111").unwrap());
        assert!(matches!(load("A000045", &src), Err(Error::MissingSequence(_))));
    }

    #[test]
    fn quick_offline_crosschecks() {
        let r = run_crosschecks(&Source::Offline, Some("A263777")).unwrap();
        assert!(r[0].passed());
        assert_eq!(r[0].per_n.len(), 12);
        let r = run_crosschecks(&Source::Offline, Some("A006318")).unwrap();
        assert!(r[0].passed());
    }
}
