//! Run manifest: a flat `key=value` file written next to the outputs.
//!
//! It records the resolved engine settings, SHA-256 digests of the inputs,
//! per-iteration counters and the output file names. Wall-clock timings and
//! the worker count are left out, so identical runs produce identical
//! manifests.

use std::fs::File;
use std::io::{self, BufReader, Read};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use ontoalign_core::engine::IterationStats;
use ontoalign_core::AlignmentConfig;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Manifest {
    entries: Vec<(String, String)>,
}

impl Manifest {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.entries {
            s.push_str(k);
            s.push('=');
            s.push_str(v);
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Manifest> {
        let mut m = Manifest::default();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("manifest line {}: expected key=value", i + 1))?;
            m.push(k.trim(), v.trim());
        }
        Ok(m)
    }

    pub fn read(path: &Path) -> Result<Manifest> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Manifest::parse(&text)
    }

    /// Adds `config.<key>` entries, sorted by key, in TOML value syntax.
    pub fn push_config(&mut self, cfg: &AlignmentConfig) -> Result<()> {
        let toml::Value::Table(table) = toml::Value::try_from(cfg)? else {
            bail!("configuration did not serialize to a table");
        };
        let mut keys: Vec<&String> = table.keys().collect();
        keys.sort();
        for k in keys {
            if k == "threads" {
                continue;
            }
            self.push(format!("config.{k}"), table[k].to_string());
        }
        Ok(())
    }

    /// Rebuilds the engine settings from `config.*` entries.
    pub fn config(&self) -> Result<AlignmentConfig> {
        let mut text = String::new();
        for (k, v) in &self.entries {
            if let Some(key) = k.strip_prefix("config.") {
                text.push_str(&format!("{key} = {v}\n"));
            }
        }
        crate::config::parse_config_file(&text)
    }

    pub fn push_iterations(&mut self, iterations: &[IterationStats]) {
        for it in iterations {
            let p = format!("iteration.{}", it.iteration);
            self.push(format!("{p}.change_fraction"), format!("{:.6}", it.change_fraction));
            self.push(format!("{p}.changed"), it.changed);
            self.push(format!("{p}.equivalences"), it.equivalences);
            self.push(format!("{p}.subrelations"), it.subrelations);
            self.push(format!("{p}.candidate_pairs"), it.candidate_pairs);
            self.push(format!("{p}.statement_pair_visits"), it.statement_pair_visits);
        }
    }
}

pub fn sha256_file(path: &Path) -> io::Result<String> {
    let mut reader = BufReader::new(File::open(path)?);
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 64 * 1024];
    loop {
        let n = reader.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex::encode(hasher.finalize()))
}
