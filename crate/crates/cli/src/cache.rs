//! Content-addressed result cache.
//!
//! Regularity values are keyed by the SHA-256 of the ideal's canonical
//! string and the field; admissible certificates by graph6, kind and `k`.
//! Entries live under `reg/` and `cert/` as small JSON files written
//! atomically (temp file + rename), so concurrent writers never expose a
//! partial file. Without a directory the cache is memory-only.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use sqfpow_core::admissible::{validate_certificate, AdmissibleCertificate};
use sqfpow_core::io::parse_graph6;
use sqfpow_core::regularity::{regularity_with, Budget};
use sqfpow_core::{FieldChoice, SqfIdeal};

const VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RegEntry {
    pub version: u32,
    pub field: String,
    pub ideal: String,
    pub reg: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateRecord {
    pub version: u32,
    pub graph6: String,
    pub certificate: AdmissibleCertificate,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct CacheStats {
    pub directory: Option<PathBuf>,
    pub regularity_entries: usize,
    pub certificate_entries: usize,
    pub bytes: u64,
    pub memory_entries: usize,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct GcReport {
    pub removed_temporary: usize,
    pub removed_corrupt: usize,
    pub kept: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AuditProblem {
    pub path: PathBuf,
    /// Violated admissibility condition, when a certificate fails validation.
    pub condition: Option<u8>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct AuditReport {
    pub regularity_checked: usize,
    pub certificates_checked: usize,
    pub problems: Vec<AuditProblem>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

pub struct Cache {
    root: Option<PathBuf>,
    mem: RwLock<HashMap<String, usize>>,
    hits: AtomicU64,
    misses: AtomicU64,
    tmp_counter: AtomicU64,
}

fn sha_hex(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

pub fn reg_key(ideal: &SqfIdeal, field: FieldChoice) -> String {
    sha_hex(&[
        "reg",
        &VERSION.to_string(),
        &field.to_string(),
        &ideal.canonical_string(),
    ])
}

pub fn certificate_key(graph6: &str, cert: &AdmissibleCertificate) -> String {
    sha_hex(&[
        "cert",
        &VERSION.to_string(),
        graph6,
        cert.kind.name(),
        &cert.k.to_string(),
    ])
}

fn is_temporary(p: &Path) -> bool {
    p.file_name()
        .and_then(|n| n.to_str())
        .is_some_and(|n| n.contains(".tmp-"))
}

fn json_files(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    if !dir.exists() {
        return Ok(out);
    }
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in fs::read_dir(&d)? {
            let p = e?.path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.push(p);
            }
        }
    }
    out.sort();
    Ok(out)
}

impl Cache {
    pub fn in_memory() -> Self {
        Cache {
            root: None,
            mem: RwLock::new(HashMap::new()),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
            tmp_counter: AtomicU64::new(0),
        }
    }

    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let root = dir.into();
        fs::create_dir_all(root.join("reg"))?;
        fs::create_dir_all(root.join("cert"))?;
        Ok(Cache {
            root: Some(root),
            ..Cache::in_memory()
        })
    }

    pub fn directory(&self) -> Option<&Path> {
        self.root.as_deref()
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    fn reg_path(&self, key: &str) -> Option<PathBuf> {
        self.root
            .as_ref()
            .map(|r| r.join("reg").join(&key[..2]).join(format!("{key}.json")))
    }

    fn cert_path(&self, key: &str) -> Option<PathBuf> {
        self.root
            .as_ref()
            .map(|r| r.join("cert").join(format!("{key}.json")))
    }

    fn write_atomic(&self, path: &Path, bytes: &[u8]) -> io::Result<()> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let n = self.tmp_counter.fetch_add(1, Ordering::Relaxed);
        let tmp = path.with_extension(format!("json.tmp-{}-{n}", std::process::id()));
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, path)
    }

    fn read_reg(&self, key: &str, ideal: &SqfIdeal, field: FieldChoice) -> Option<usize> {
        let path = self.reg_path(key)?;
        let text = fs::read_to_string(path).ok()?;
        let e: RegEntry = serde_json::from_str(&text).ok()?;
        // a colliding or stale file is treated as a miss
        (e.version == VERSION
            && e.field == field.to_string()
            && e.ideal == ideal.canonical_string())
        .then_some(e.reg)
    }

    /// `reg(ideal)` and whether it came from the cache. Budget errors are
    /// returned, not cached.
    pub fn regularity(
        &self,
        ideal: &SqfIdeal,
        field: FieldChoice,
        budget: &Budget,
    ) -> sqfpow_core::Result<(usize, bool)> {
        if ideal.is_zero() || ideal.is_unit() {
            return Ok((0, true));
        }
        let key = reg_key(ideal, field);
        if let Some(&r) = self.mem.read().expect("cache lock").get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok((r, true));
        }
        if let Some(r) = self.read_reg(&key, ideal, field) {
            self.mem.write().expect("cache lock").insert(key, r);
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok((r, true));
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let r = regularity_with(ideal, field, budget)?;
        if let Some(path) = self.reg_path(&key) {
            let entry = RegEntry {
                version: VERSION,
                field: field.to_string(),
                ideal: ideal.canonical_string(),
                reg: r,
            };
            // a failed write only costs a recomputation later
            let _ = self.write_atomic(&path, &serde_json::to_vec(&entry).expect("serialisable"));
        }
        self.mem.write().expect("cache lock").insert(key, r);
        Ok((r, false))
    }

    /// Persists a certificate (when backed by a directory) and returns its key.
    pub fn store_certificate(
        &self,
        graph6: &str,
        cert: &AdmissibleCertificate,
    ) -> io::Result<String> {
        let key = certificate_key(graph6, cert);
        if let Some(path) = self.cert_path(&key) {
            let rec = CertificateRecord {
                version: VERSION,
                graph6: graph6.to_string(),
                certificate: cert.clone(),
            };
            self.write_atomic(
                &path,
                &serde_json::to_vec_pretty(&rec).expect("serialisable"),
            )?;
        }
        Ok(key)
    }

    pub fn stats(&self) -> io::Result<CacheStats> {
        let mut s = CacheStats {
            directory: self.root.clone(),
            memory_entries: self.mem.read().expect("cache lock").len(),
            ..CacheStats::default()
        };
        if let Some(root) = &self.root {
            for p in json_files(&root.join("reg"))? {
                s.bytes += fs::metadata(&p)?.len();
                s.regularity_entries += usize::from(!is_temporary(&p));
            }
            for p in json_files(&root.join("cert"))? {
                s.bytes += fs::metadata(&p)?.len();
                s.certificate_entries += usize::from(!is_temporary(&p));
            }
        }
        Ok(s)
    }

    /// Removes leftover temporary files and entries that no longer parse or
    /// whose file name does not match their content.
    pub fn gc(&self) -> io::Result<GcReport> {
        let mut rep = GcReport::default();
        let Some(root) = &self.root else {
            return Ok(rep);
        };
        for (sub, is_reg) in [("reg", true), ("cert", false)] {
            for p in json_files(&root.join(sub))? {
                if is_temporary(&p) {
                    fs::remove_file(&p)?;
                    rep.removed_temporary += 1;
                } else if entry_key_matches(&p, is_reg) {
                    rep.kept += 1;
                } else {
                    fs::remove_file(&p)?;
                    rep.removed_corrupt += 1;
                }
            }
        }
        Ok(rep)
    }

    /// Re-validates every stored certificate from scratch and checks that
    /// every regularity entry sits under its own key. With `deep`, stored
    /// regularities are recomputed as well.
    pub fn audit(&self, deep: bool) -> io::Result<AuditReport> {
        let mut rep = AuditReport::default();
        let Some(root) = &self.root else {
            return Ok(rep);
        };
        let problem = |path: &Path, condition, detail: String| AuditProblem {
            path: path.to_path_buf(),
            condition,
            detail,
        };
        for p in json_files(&root.join("reg"))?
            .into_iter()
            .filter(|p| !is_temporary(p))
        {
            rep.regularity_checked += 1;
            let entry = fs::read_to_string(&p)
                .ok()
                .and_then(|t| serde_json::from_str::<RegEntry>(&t).ok());
            let Some(e) = entry else {
                rep.problems
                    .push(problem(&p, None, "unreadable regularity entry".into()));
                continue;
            };
            if !entry_key_matches(&p, true) {
                rep.problems.push(problem(
                    &p,
                    None,
                    "file name does not match the stored ideal".into(),
                ));
                continue;
            }
            if deep {
                let recomputed = parse_reg_entry(&e).and_then(|(ideal, field)| {
                    regularity_with(&ideal, field, &Budget::default())
                        .map_err(|err| err.to_string())
                });
                match recomputed {
                    Ok(r) if r == e.reg => {}
                    Ok(r) => rep.problems.push(problem(
                        &p,
                        None,
                        format!("stored reg {} but recomputed {r}", e.reg),
                    )),
                    Err(msg) => rep.problems.push(problem(&p, None, msg)),
                }
            }
        }
        for p in json_files(&root.join("cert"))?
            .into_iter()
            .filter(|p| !is_temporary(p))
        {
            rep.certificates_checked += 1;
            let rec = fs::read_to_string(&p)
                .ok()
                .and_then(|t| serde_json::from_str::<CertificateRecord>(&t).ok());
            let Some(rec) = rec else {
                rep.problems
                    .push(problem(&p, None, "unreadable certificate".into()));
                continue;
            };
            let graph = match parse_graph6(&rec.graph6, 1) {
                Ok(g) => g,
                Err(e) => {
                    rep.problems.push(problem(&p, None, e.to_string()));
                    continue;
                }
            };
            match validate_certificate(&rec.certificate, graph.hypergraph()) {
                Ok(c) if c.valid => {}
                Ok(c) => rep.problems.push(problem(&p, c.violated, c.detail)),
                Err(e) => rep.problems.push(problem(&p, None, e.to_string())),
            }
        }
        Ok(rep)
    }
}

fn parse_reg_entry(e: &RegEntry) -> Result<(SqfIdeal, FieldChoice), String> {
    let field: FieldChoice = e
        .field
        .parse()
        .map_err(|_| format!("unknown field {}", e.field))?;
    let json = serde_json::from_str(&e.ideal).map_err(|err| err.to_string())?;
    let ideal = SqfIdeal::from_json(&json).map_err(|err| err.to_string())?;
    Ok((ideal, field))
}

fn entry_key_matches(p: &Path, is_reg: bool) -> bool {
    let Some(stem) = p.file_stem().and_then(|s| s.to_str()) else {
        return false;
    };
    let Ok(text) = fs::read_to_string(p) else {
        return false;
    };
    if is_reg {
        serde_json::from_str::<RegEntry>(&text)
            .ok()
            .and_then(|e| parse_reg_entry(&e).ok())
            .is_some_and(|(ideal, field)| reg_key(&ideal, field) == stem)
    } else {
        serde_json::from_str::<CertificateRecord>(&text)
            .is_ok_and(|r| certificate_key(&r.graph6, &r.certificate) == stem)
    }
}
