//! Census cache files.
//!
//! One file per order, `census-n{n}.jsonl`. The first line is the header
//!
//! ```text
//! #tmc-census format=1 solver=<SOLVER_VERSION> n=<n> records=<count>
//! ```
//!
//! followed by one JSON-encoded record per line in census order. A file whose
//! header names another format or solver version is ignored and rewritten.

use super::census::{CensusRecord, TmcCensus};
use super::HarnessError;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "TMC_CACHE_DIR";
pub const CACHE_FORMAT: u32 = 1;
/// Bumped whenever solver output for a graph could change.
pub const SOLVER_VERSION: u32 = 1;

fn path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("census-n{n}.jsonl"))
}

fn header_prefix(n: usize) -> String {
    format!("#tmc-census format={CACHE_FORMAT} solver={SOLVER_VERSION} n={n} records=")
}

pub(crate) fn load(dir: &Path, n: usize) -> Result<Option<TmcCensus>, HarnessError> {
    let file = path(dir, n);
    let reader = match fs::File::open(&file) {
        Ok(f) => BufReader::new(f),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let bad = |reason: String| HarnessError::Cache {
        path: file.display().to_string(),
        reason,
    };
    let mut lines = reader.lines();
    let first = match lines.next() {
        Some(line) => line?,
        None => return Ok(None),
    };
    let count: usize = match first.strip_prefix(&header_prefix(n)) {
        Some(c) => c
            .parse()
            .map_err(|_| bad(format!("bad record count in {first:?}")))?,
        None => return Ok(None),
    };
    let mut records = Vec::with_capacity(count);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let rec: CensusRecord =
            serde_json::from_str(&line).map_err(|e| bad(format!("line {}: {e}", i + 2)))?;
        records.push(rec);
    }
    if records.len() != count {
        return Err(bad(format!(
            "header promises {count} records, found {}",
            records.len()
        )));
    }
    Ok(Some(TmcCensus { n, records }))
}

pub(crate) fn store(dir: &Path, census: &TmcCensus) -> Result<(), HarnessError> {
    fs::create_dir_all(dir)?;
    let target = path(dir, census.n);
    let partial = target.with_extension("partial");
    {
        let mut w = BufWriter::new(fs::File::create(&partial)?);
        writeln!(w, "{}{}", header_prefix(census.n), census.records.len())?;
        for rec in &census.records {
            let line = serde_json::to_string(rec).map_err(|e| HarnessError::Cache {
                path: target.display().to_string(),
                reason: e.to_string(),
            })?;
            writeln!(w, "{line}")?;
        }
        w.flush()?;
    }
    fs::rename(&partial, &target)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::census::{build_census, CensusOptions};
    use super::*;

    #[test]
    fn round_trip_and_stale_header() {
        let dir = tempfile::tempdir().unwrap();
        let opts = CensusOptions {
            cache_dir: Some(dir.path().to_path_buf()),
            ..Default::default()
        };
        let fresh = build_census(5, &opts).unwrap();
        let file = path(dir.path(), 5);
        let text = fs::read_to_string(&file).unwrap();
        assert!(text.starts_with("#tmc-census format=1 solver=1 n=5 records=21\n"));
        assert_eq!(load(dir.path(), 5).unwrap().unwrap(), fresh);

        fs::write(&file, text.replacen("solver=1", "solver=0", 1)).unwrap();
        assert_eq!(load(dir.path(), 5).unwrap(), None);
        assert_eq!(build_census(5, &opts).unwrap(), fresh);

        fs::write(&file, text.replacen("records=21", "records=22", 1)).unwrap();
        assert!(matches!(
            load(dir.path(), 5),
            Err(HarnessError::Cache { .. })
        ));
        assert_eq!(load(dir.path(), 6).unwrap(), None);
    }
}
