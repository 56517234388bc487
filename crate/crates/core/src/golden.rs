//! Golden-file corpus: canonical serializations of a fixed set of objects,
//! laid out as `<suite>/<series>/<key>.txt` under a root directory.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::binomial::verify_binomial_bcd;
use crate::characters::{branch, character, fmt_branch};
use crate::combinatorics::{partitions_iter, Partition, Series};
use crate::error::{Error, Result};
use crate::rational::fmt_q;
use crate::shifted::shifted_value;

fn file_key(n: usize, p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(ToString::to_string).collect();
    if parts.is_empty() {
        format!("n{n}_0")
    } else {
        format!("n{n}_{}", parts.join("_"))
    }
}

/// The corpus as relative path to file contents.
pub fn corpus() -> Result<BTreeMap<PathBuf, String>> {
    let mut out = BTreeMap::new();
    let mut put = |suite: &str, series: Series, key: String, body: String| {
        out.insert(
            Path::new(suite)
                .join(series.to_string())
                .join(format!("{key}.txt")),
            body + "\n",
        );
    };
    for series in Series::ALL {
        for n in 1..=2 {
            for lambda in partitions_iter(n, 3) {
                let chi = character(series, &lambda.to_signature(n)?)?;
                put(
                    "characters",
                    series,
                    file_key(n, &lambda),
                    chi.canonical().to_string(),
                );
            }
            // s* for A, t* otherwise
            for mu in partitions_iter(n, 2) {
                let mut table = Vec::new();
                for lambda in partitions_iter(n, 4) {
                    let v = shifted_value(series, &mu, &lambda.to_signature(n)?)?;
                    table.push(format!("{lambda}: {}", fmt_q(&v)));
                }
                put("shifted", series, file_key(n, &mu), table.join("\n"));
            }
        }
        for big in partitions_iter(2, 3) {
            let b = branch(series, &big.to_signature(2)?)?;
            put("branching", series, file_key(2, &big), fmt_branch(&b));
        }
        if series.is_bcd() {
            for n in 1..=2 {
                for lambda in partitions_iter(n, 2) {
                    let r = verify_binomial_bcd(series, &lambda, n)?;
                    put("binomial", series, file_key(n, &lambda), r.lhs.to_string());
                }
            }
        }
    }
    Ok(out)
}

fn io(e: std::io::Error, path: &Path) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

/// Writes the corpus under `dir`, returning the number of files.
pub fn write_corpus(dir: &Path) -> Result<usize> {
    let files = corpus()?;
    for (rel, body) in &files {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|e| io(e, parent))?;
        }
        fs::write(&path, body).map_err(|e| io(e, &path))?;
    }
    Ok(files.len())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoldenDiff {
    pub compared: usize,
    pub missing: Vec<PathBuf>,
    /// Path with expected (on disk) and actual contents.
    pub changed: Vec<(PathBuf, String, String)>,
}

impl GoldenDiff {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.changed.is_empty()
    }

    /// Human-readable listing of every drifted line.
    pub fn listing(&self) -> String {
        let mut out = String::new();
        for p in &self.missing {
            out.push_str(&format!("missing {}\n", p.display()));
        }
        for (p, expected, actual) in &self.changed {
            out.push_str(&format!("changed {}\n", p.display()));
            let e: Vec<&str> = expected.lines().collect();
            let a: Vec<&str> = actual.lines().collect();
            for i in 0..e.len().max(a.len()) {
                match (e.get(i), a.get(i)) {
                    (Some(x), Some(y)) if x == y => {}
                    (x, y) => {
                        if let Some(x) = x {
                            out.push_str(&format!("  - {x}\n"));
                        }
                        if let Some(y) = y {
                            out.push_str(&format!("  + {y}\n"));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Byte-for-byte comparison of the corpus against the files under `dir`.
pub fn compare_corpus(dir: &Path) -> Result<GoldenDiff> {
    let mut diff = GoldenDiff::default();
    for (rel, actual) in corpus()? {
        diff.compared += 1;
        let path = dir.join(&rel);
        match fs::read(&path) {
            Ok(bytes) if bytes == actual.as_bytes() => {}
            Ok(bytes) => {
                diff.changed
                    .push((rel, String::from_utf8_lossy(&bytes).into_owned(), actual))
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => diff.missing.push(rel),
            Err(e) => return Err(io(e, &path)),
        }
    }
    Ok(diff)
}
