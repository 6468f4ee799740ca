use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use knotsum::conventions;
use knotsum::InvariantResult;
use sha2::{Digest, Sha256};

use crate::config::RunConfig;

/// Content hash of everything that determines a result, including the
/// convention ledger.
pub fn key(cfg: &RunConfig) -> String {
    let specs: Vec<String> = cfg
        .specs
        .iter()
        .map(|s| format!("{s:?}").to_lowercase())
        .collect();
    let material = format!(
        "word={};n={};N={};specs={};{}",
        cfg.braid.to_text(),
        cfg.braid.strands(),
        cfg.colour,
        specs.join(","),
        conventions::canonical_string()
    );
    hex::encode(Sha256::digest(material.as_bytes()))
}

fn path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

/// A cached result, if present and readable. Unreadable entries count as misses.
pub fn load(dir: &Path, key: &str) -> Option<InvariantResult> {
    let text = fs::read_to_string(path(dir, key)).ok()?;
    InvariantResult::from_json_str(text.trim_end()).ok()
}

/// Writes an entry atomically. Timing is never cached.
pub fn store(dir: &Path, key: &str, result: &InvariantResult) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut clean = result.clone();
    clean.ms = None;
    let tmp = dir.join(format!(".{key}.{}.tmp", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    writeln!(f, "{}", clean.to_json_string())?;
    f.sync_all()?;
    fs::rename(tmp, path(dir, key))
}
