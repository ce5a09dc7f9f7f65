//! Optional on-disk cache for enumerated outerplanar corpora, keyed by the
//! `NONSEP_FIXTURE_CACHE` environment variable (a directory). Cache misses
//! or invalid entries fall back to recomputation.

use anyhow::Result;
use nonsep_core::families::enumerate_max_outerplanar_with_cap;
use nonsep_core::{decode_graph6, encode_graph6, Graph};
use std::fs;
use std::path::PathBuf;

pub const CACHE_ENV: &str = "NONSEP_FIXTURE_CACHE";

pub fn enumerated_mops(n: usize, cap: usize) -> Result<Vec<Graph>> {
    let dir = match std::env::var_os(CACHE_ENV) {
        Some(d) => PathBuf::from(d),
        None => return Ok(enumerate_max_outerplanar_with_cap(n, cap)?),
    };
    let path = dir.join(format!("mop-{n}.g6"));
    if let Ok(text) = fs::read_to_string(&path) {
        let mut graphs = Vec::new();
        let mut ok = true;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            match decode_graph6(line) {
                Ok(g) if g.order() == n => graphs.push(g),
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && !graphs.is_empty() {
            return Ok(graphs);
        }
    }
    let graphs = enumerate_max_outerplanar_with_cap(n, cap)?;
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&encode_graph6(g)?);
        text.push('\n');
    }
    fs::create_dir_all(&dir).and_then(|_| fs::write(&path, text)).ok();
    Ok(graphs)
}
