//! Alignment settings from defaults, a TOML file and command-line flags, in
//! increasing order of precedence.

use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::Args;
use ontoalign_core::engine::PenaltyForm;
use ontoalign_core::{AlignmentConfig, FunctionalityMode, LiteralMode};

fn parse_penalty(s: &str) -> Result<PenaltyForm, String> {
    match s {
        "object-mismatch" => Ok(PenaltyForm::ObjectMismatch),
        "subject-mismatch" => Ok(PenaltyForm::SubjectMismatch),
        _ => Err(format!("unknown penalty form `{s}` (expected object-mismatch or subject-mismatch)")),
    }
}

/// Engine flags shared by `align`; unset flags defer to the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct EngineFlags {
    /// TOML file with engine settings (keys as in the manifest, without `config.`).
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
    /// Bootstrap relation-inclusion value and equivalence storage threshold.
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub max_iterations: Option<usize>,
    /// Stop when fewer than this fraction of assignments changed.
    #[arg(long)]
    pub convergence: Option<f64>,
    /// Statements per relation (instances per class) used for inclusions.
    #[arg(long)]
    pub pair_cap: Option<usize>,
    /// Penalize disagreeing values of functional relations.
    #[arg(long)]
    pub negative_evidence: bool,
    #[arg(long, value_parser = parse_penalty)]
    pub penalty_form: Option<PenaltyForm>,
    /// strict or alnum-lower.
    #[arg(long)]
    pub literal_mode: Option<LiteralMode>,
    /// harmonic-mean, pair-ratio, arg-ratio or arithmetic-mean.
    #[arg(long)]
    pub functionality_mode: Option<FunctionalityMode>,
    /// Use every stored equivalence as evidence, not only maximal assignments.
    #[arg(long)]
    pub all_probabilities: bool,
    /// Minimum class inclusion score written to classes.tsv.
    #[arg(long)]
    pub class_threshold: Option<f64>,
    /// Leave classes with more instances than this out of classes.tsv.
    #[arg(long)]
    pub class_max_instances: Option<usize>,
    /// Worker threads (0: one per core). Outputs do not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
}

fn known_keys() -> Vec<String> {
    let mut cfg = AlignmentConfig::default();
    cfg.class_max_instances = Some(0);
    match toml::Value::try_from(cfg) {
        Ok(toml::Value::Table(t)) => t.keys().cloned().collect(),
        _ => Vec::new(),
    }
}

/// Parses a TOML settings file; unknown keys are rejected.
pub fn parse_config_file(text: &str) -> Result<AlignmentConfig> {
    let table: toml::Table = toml::from_str(text)?;
    let known = known_keys();
    for key in table.keys() {
        if !known.contains(key) {
            bail!("unknown setting `{key}` (known: {})", known.join(", "));
        }
    }
    Ok(toml::Value::Table(table).try_into()?)
}

pub fn load_config_file(path: &Path) -> Result<AlignmentConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_config_file(&text).with_context(|| format!("parsing {}", path.display()))
}

impl EngineFlags {
    /// Defaults, overlaid by the config file, overlaid by the flags.
    pub fn resolve(&self) -> Result<AlignmentConfig> {
        let mut cfg = match &self.config {
            Some(path) => load_config_file(path)?,
            None => AlignmentConfig::default(),
        };
        self.apply(&mut cfg);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn apply(&self, cfg: &mut AlignmentConfig) {
        if let Some(v) = self.theta {
            cfg.theta = v;
        }
        if let Some(v) = self.max_iterations {
            cfg.max_iterations = v;
        }
        if let Some(v) = self.convergence {
            cfg.convergence_fraction = v;
        }
        if let Some(v) = self.pair_cap {
            cfg.pair_cap = v;
        }
        if self.negative_evidence {
            cfg.negative_evidence = true;
        }
        if let Some(v) = self.penalty_form {
            cfg.penalty_form = v;
        }
        if let Some(v) = self.literal_mode {
            cfg.literal_mode = v;
        }
        if let Some(v) = self.functionality_mode {
            cfg.functionality_mode = v;
        }
        if self.all_probabilities {
            cfg.restrict_to_assignment = false;
        }
        if let Some(v) = self.class_threshold {
            cfg.class_score_threshold = v;
        }
        if let Some(v) = self.class_max_instances {
            cfg.class_max_instances = Some(v);
        }
        if let Some(v) = self.threads {
            cfg.threads = v;
        }
    }
}
