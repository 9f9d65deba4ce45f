//! Append-only journal of completed search levels, replayed by `--resume`.
//!
//! Each line is a JSON object holding one completed level below one root.
//! A torn final line (from an interrupted write) is discarded on replay and
//! truncated away before new lines are appended.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::Path;

use fine_core::arith::{Int, IntMatrix};
use fine_core::classify::{ClassEntry, DedupStore, SearchLog};
use fine_core::normal_form::{digest_matrix, NormalForm};
use fine_core::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct EntryLine {
    mask: String,
    vertices: String,
    digest: String,
    canonical: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct LevelLine {
    root: String,
    level: usize,
    entries: Vec<EntryLine>,
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Invariant(format!("journal: {e}"))
}

fn encode(e: &ClassEntry) -> Result<EntryLine> {
    let m = &e.normal_form.canonical_vertices;
    let canonical = m
        .row_vecs()
        .into_iter()
        .map(|row| row.iter().map(|v| i64::try_from(v).map_err(io_err)).collect())
        .collect::<Result<_>>()?;
    Ok(EntryLine {
        mask: format!("{:x}", e.mask),
        vertices: format!("{:x}", e.vertex_mask),
        digest: e.normal_form.digest_hex(),
        canonical,
    })
}

fn decode(l: &EntryLine) -> Result<ClassEntry> {
    let parse = |s: &str| u128::from_str_radix(s, 16).map_err(io_err);
    let rows: Vec<Vec<Int>> = l.canonical.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect();
    let canonical_vertices = IntMatrix::from_rows(rows)?;
    let digest = digest_matrix(&canonical_vertices);
    if format!("{digest:032x}") != l.digest {
        return Err(io_err("digest does not match canonical matrix"));
    }
    Ok(ClassEntry {
        mask: parse(&l.mask)?,
        vertex_mask: parse(&l.vertices)?,
        normal_form: NormalForm { canonical_vertices, digest },
    })
}

/// File-backed [`SearchLog`].
pub struct Journal {
    file: File,
    replayed: BTreeMap<String, Vec<Vec<ClassEntry>>>,
}

impl Journal {
    /// Starts an empty journal, discarding any previous content.
    pub fn create(path: &Path) -> Result<Self> {
        let file = File::create(path).map_err(io_err)?;
        Ok(Self { file, replayed: BTreeMap::new() })
    }

    /// Replays an existing journal (creating it when absent) and positions
    /// for appending.
    pub fn resume(path: &Path) -> Result<Self> {
        let mut file =
            OpenOptions::new().read(true).write(true).create(true).truncate(false).open(path).map_err(io_err)?;
        let mut replayed: BTreeMap<String, Vec<Vec<ClassEntry>>> = BTreeMap::new();
        let mut valid_len: u64 = 0;
        let mut reader = BufReader::new(&mut file);
        let mut line = String::new();
        loop {
            line.clear();
            let n = reader.read_line(&mut line).map_err(io_err)?;
            if n == 0 || !line.ends_with('\n') {
                break;
            }
            let Ok(parsed) = serde_json::from_str::<LevelLine>(&line) else { break };
            let levels = replayed.entry(parsed.root.clone()).or_default();
            if parsed.level < levels.len() {
                valid_len += n as u64;
                continue;
            }
            if parsed.level > levels.len() {
                return Err(io_err(format!("gap before level {} of {}", parsed.level, parsed.root)));
            }
            levels.push(parsed.entries.iter().map(decode).collect::<Result<_>>()?);
            valid_len += n as u64;
        }
        drop(reader);
        file.set_len(valid_len).map_err(io_err)?;
        file.seek(SeekFrom::End(0)).map_err(io_err)?;
        Ok(Self { file, replayed })
    }

    /// Every class recorded in the journal.
    pub fn replayed_store(&self) -> DedupStore {
        let mut store = DedupStore::new();
        for e in self.replayed.values().flatten().flatten() {
            store.insert_if_absent(&e.normal_form);
        }
        store
    }

    pub fn replayed_levels(&self, root_id: &str) -> usize {
        self.replayed.get(root_id).map_or(0, Vec::len)
    }
}

impl SearchLog for Journal {
    fn completed_levels(&mut self, root_id: &str) -> Result<Vec<Vec<ClassEntry>>> {
        Ok(self.replayed.get(root_id).cloned().unwrap_or_default())
    }

    fn level_completed(&mut self, root_id: &str, level: usize, entries: &[ClassEntry]) -> Result<()> {
        let line =
            LevelLine { root: root_id.to_string(), level, entries: entries.iter().map(encode).collect::<Result<_>>()? };
        let mut text = serde_json::to_string(&line).map_err(io_err)?;
        text.push('\n');
        self.file.write_all(text.as_bytes()).map_err(io_err)?;
        self.file.flush().map_err(io_err)?;
        let levels = self.replayed.entry(root_id.to_string()).or_default();
        if level == levels.len() {
            levels.push(entries.to_vec());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fine_core::classify::{Classifier, NoLog, Sequential};
    use fine_core::shapes;

    #[test]
    fn resume_after_torn_write() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("j.log");
        let root = shapes::dilated_simplex(2, 3).unwrap();
        {
            let mut j = Journal::create(&path).unwrap();
            let mut c = Classifier::new(&Sequential, &mut j);
            c.search("t", &root).unwrap();
        }
        let full = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = full.lines().collect();
        assert!(lines.len() > 3);
        // Keep two complete levels and half of the third.
        let mut torn = format!("{}\n{}\n", lines[0], lines[1]);
        torn.push_str(&lines[2][..lines[2].len() / 2]);
        std::fs::write(&path, torn).unwrap();

        let mut j = Journal::resume(&path).unwrap();
        assert_eq!(j.replayed_levels("t"), 2);
        let resumed = Classifier::new(&Sequential, &mut j).search("t", &root).unwrap();
        let mut nolog = NoLog;
        let fresh = Classifier::new(&Sequential, &mut nolog).search("t", &root).unwrap();
        assert_eq!(resumed.levels(), fresh.levels());
        assert_eq!(std::fs::read_to_string(&path).unwrap(), full);

        // A completed journal replays to the same class set without new lines.
        let mut j = Journal::resume(&path).unwrap();
        let store = j.replayed_store();
        assert_eq!(store.len(), fresh.classes().count());
        Classifier::new(&Sequential, &mut j).search("t", &root).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), full);
    }
}
