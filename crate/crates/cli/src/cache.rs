//! JSON-lines result cache, one record per (q spec, computation kind,
//! degree), with a format-version field. Records from other versions or
//! other q specs are ignored; new results are appended on flush.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use zigzag_core::QSpec;

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Record {
    v: u32,
    qspec: QSpec,
    kind: String,
    m: usize,
    value: usize,
}

pub struct Store {
    path: Option<PathBuf>,
    qspec: QSpec,
    entries: HashMap<(String, usize), usize>,
    fresh: Vec<Record>,
}

impl Store {
    pub fn open(path: Option<&Path>, qspec: &QSpec) -> std::io::Result<Store> {
        let mut entries = HashMap::new();
        if let Some(p) = path {
            if p.exists() {
                for line in std::fs::read_to_string(p)?.lines() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let Ok(rec) = serde_json::from_str::<Record>(line) else {
                        continue;
                    };
                    if rec.v == CACHE_VERSION && rec.qspec == *qspec {
                        entries.insert((rec.kind, rec.m), rec.value);
                    }
                }
            }
        }
        Ok(Store {
            path: path.map(|p| p.to_path_buf()),
            qspec: qspec.clone(),
            entries,
            fresh: Vec::new(),
        })
    }

    /// Cached value, or compute and remember it.
    pub fn get_or(&mut self, kind: &str, m: usize, compute: impl FnOnce() -> usize) -> usize {
        if let Some(v) = self.entries.get(&(kind.to_string(), m)) {
            return *v;
        }
        let value = compute();
        self.entries.insert((kind.to_string(), m), value);
        if self.path.is_some() {
            self.fresh.push(Record {
                v: CACHE_VERSION,
                qspec: self.qspec.clone(),
                kind: kind.to_string(),
                m,
                value,
            });
        }
        value
    }

    /// Append the newly computed records.
    pub fn flush(&mut self) -> std::io::Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if self.fresh.is_empty() {
            return Ok(());
        }
        use std::io::Write;
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)?;
        for rec in self.fresh.drain(..) {
            writeln!(file, "{}", serde_json::to_string(&rec).expect("serializable"))?;
        }
        Ok(())
    }
}
