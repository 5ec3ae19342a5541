//! Subcommands and their exit codes.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use log::{info, warn};
use ontoalign_core::evaluation::{evaluate_pairs, evaluate_threshold_sweep, sweep_to_tsv, FactFilter, Metrics, Scope};
use ontoalign_core::ntriples::{
    load_gold, load_ontology, read_alignment_file, read_judgments, write_alignment_file, AlignmentKind, LoadOptions,
};
use ontoalign_core::{Aligner, AlignmentConfig, FunctionalityMode, FunctionalityTable, Ontology, Origin};

use crate::config::EngineFlags;
use crate::generate::{generate, write_fixture, GeneratorConfig, Profile};
use crate::manifest::{sha256_file, Manifest};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_NOT_CONVERGED: i32 = 4;

pub const INSTANCES_FILE: &str = "instances.tsv";
pub const RELATIONS_FILE: &str = "relations.tsv";
pub const CLASSES_FILE: &str = "classes.tsv";
pub const MANIFEST_FILE: &str = "manifest.txt";

#[derive(Debug)]
pub enum Failure {
    Usage(anyhow::Error),
    Data(anyhow::Error),
    NotConverged { iterations: usize },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Data(_) => EXIT_DATA,
            Failure::NotConverged { .. } => EXIT_NOT_CONVERGED,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(e) => write!(f, "usage error: {e:#}"),
            Failure::Data(e) => write!(f, "{e:#}"),
            Failure::NotConverged { iterations } => {
                write!(f, "no convergence after {iterations} iterations")
            }
        }
    }
}

fn data(e: anyhow::Error) -> Failure {
    Failure::Data(e)
}

fn usage(msg: impl fmt::Display) -> Failure {
    Failure::Usage(anyhow!("{msg}"))
}

fn require_file(path: &Path, what: &str) -> Result<(), Failure> {
    if path.is_file() {
        Ok(())
    } else {
        Err(usage(format!("{what} `{}` does not exist", path.display())))
    }
}

#[derive(Debug, Parser)]
#[command(name = "ontoalign", version, about = "Probabilistic alignment of two RDFS ontologies")]
pub struct Cli {
    /// Only print warnings and errors.
    #[arg(short, long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Align two N-Triples ontologies and write instance, relation and class alignments.
    Align(AlignArgs),
    /// Re-run an alignment recorded in a manifest.
    Replay(ReplayArgs),
    /// Score an alignment against a gold standard.
    Eval(EvalArgs),
    /// Write a synthetic ontology pair with its ground truth.
    Generate(GenerateArgs),
    /// Print the functionality of every relation of one ontology.
    Functionality(FunctionalityArgs),
}

#[derive(Debug, Clone, Args)]
pub struct AlignArgs {
    pub first: PathBuf,
    pub second: PathBuf,
    /// Output directory.
    #[arg(short, long, default_value = ".")]
    pub out: PathBuf,
    #[command(flatten)]
    pub engine: EngineFlags,
    /// Exit with a distinct code when the iteration limit is reached first.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    #[arg(short, long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ScopeArg {
    GoldCovered,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum KindArg {
    Instance,
    Relation,
    Class,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// Alignment TSV as written by `align`.
    #[arg(long)]
    pub alignment: PathBuf,
    /// Gold pairs, `left<TAB>right` per line.
    #[arg(long)]
    pub gold: PathBuf,
    #[arg(long, value_enum, default_value = "instance")]
    pub kind: KindArg,
    #[arg(long, value_enum, default_value = "gold-covered")]
    pub scope: ScopeArg,
    /// Keep only pairs whose second-ontology entity has more than N facts.
    #[arg(long, requires = "second")]
    pub min_facts: Option<usize>,
    /// Second ontology, for `--min-facts`.
    #[arg(long)]
    pub second: Option<PathBuf>,
    /// Judged sample (`left<TAB>right<TAB>label`) for a threshold sweep.
    #[arg(long)]
    pub judgments: Option<PathBuf>,
    /// Write the metrics TSV here instead of standard output.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[arg(long, default_value = "people")]
    pub profile: Profile,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of entities.
    #[arg(long, default_value_t = 1000)]
    pub instances: usize,
    /// Keep entity names in the second ontology instead of renaming them.
    #[arg(long)]
    pub keep_names: bool,
    #[arg(long, default_value_t = 0.0)]
    pub attribute_drop: f64,
    #[arg(long, default_value_t = 0.0)]
    pub literal_perturbation: f64,
    /// Misspell unique key literals too, with this probability.
    #[arg(long, default_value_t = 0.0)]
    pub key_perturbation: f64,
    /// Format phones, addresses and categories differently in the second ontology.
    #[arg(long)]
    pub format_drift: bool,
    #[arg(long, default_value_t = 0)]
    pub split_relations: usize,
    #[arg(long, default_value_t = 0)]
    pub merge_relations: usize,
    #[arg(short, long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct FunctionalityArgs {
    pub ontology: PathBuf,
    #[arg(long, default_value = "harmonic-mean")]
    pub mode: FunctionalityMode,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

pub fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Align(a) => align(a).map(|_| ()),
        Command::Replay(a) => replay(a).map(|_| ()),
        Command::Eval(a) => eval(a).map(|_| ()),
        Command::Generate(a) => generate_cmd(a),
        Command::Functionality(a) => functionality(a),
    }
}

// ---------------------------------------------------------------------------
// align

#[derive(Debug, Clone)]
pub struct AlignOutcome {
    pub converged: bool,
    pub iterations: usize,
    pub manifest: Manifest,
}

pub fn align(args: &AlignArgs) -> Result<AlignOutcome, Failure> {
    require_file(&args.first, "first ontology")?;
    require_file(&args.second, "second ontology")?;
    let cfg = args.engine.resolve().map_err(Failure::Usage)?;
    let outcome = run_alignment(&args.first, &args.second, &cfg, &args.out)?;
    if args.strict && !outcome.converged {
        return Err(Failure::NotConverged {
            iterations: outcome.iterations,
        });
    }
    Ok(outcome)
}

pub fn replay(args: &ReplayArgs) -> Result<AlignOutcome, Failure> {
    require_file(&args.manifest, "manifest")?;
    let m = Manifest::read(&args.manifest).map_err(data)?;
    let mut cfg = m.config().map_err(data)?;
    if let Some(t) = args.threads {
        cfg.threads = t;
    }
    let mut inputs = Vec::new();
    for side in ["first", "second"] {
        let path = m
            .get(&format!("input.{side}.path"))
            .ok_or_else(|| data(anyhow!("manifest lacks input.{side}.path")))?;
        let path = PathBuf::from(path);
        require_file(&path, "recorded input")?;
        let digest = sha256_file(&path).map_err(|e| data(e.into()))?;
        if Some(digest.as_str()) != m.get(&format!("input.{side}.sha256")) {
            return Err(data(anyhow!("{} changed since the manifest was written", path.display())));
        }
        inputs.push(path);
    }
    run_alignment(&inputs[0], &inputs[1], &cfg, &args.out)
}

fn run_alignment(first: &Path, second: &Path, cfg: &AlignmentConfig, out: &Path) -> Result<AlignOutcome, Failure> {
    let opts = LoadOptions::default();
    let (o1, _) = load_ontology(&[first.to_path_buf()], Origin::First, &opts).map_err(|e| data(e.into()))?;
    let (o2, _) = load_ontology(&[second.to_path_buf()], Origin::Second, &opts).map_err(|e| data(e.into()))?;
    let aligner = Aligner::new(&o1, &o2, cfg.clone()).map_err(|e| Failure::Usage(e.into()))?;
    let result = aligner.run();

    std::fs::create_dir_all(out)
        .with_context(|| format!("creating {}", out.display()))
        .map_err(data)?;
    let instances = result.instance_rows(&o1, &o2);
    let relations = result.relation_rows(&o1, &o2);
    let classes = result.class_rows(&o1, &o2, cfg);
    let counts = (instances.len(), relations.len(), classes.len());
    write_alignment_file(instances, &out.join(INSTANCES_FILE)).map_err(|e| data(e.into()))?;
    write_alignment_file(relations, &out.join(RELATIONS_FILE)).map_err(|e| data(e.into()))?;
    write_alignment_file(classes, &out.join(CLASSES_FILE)).map_err(|e| data(e.into()))?;

    let mut m = Manifest::default();
    m.push("tool", "ontoalign");
    m.push("version", env!("CARGO_PKG_VERSION"));
    m.push_config(cfg).map_err(data)?;
    for (side, path) in [("first", first), ("second", second)] {
        m.push(format!("input.{side}.path"), path.display());
        m.push(
            format!("input.{side}.sha256"),
            sha256_file(path).map_err(|e| data(e.into()))?,
        );
    }
    m.push("input.first.statements", o1.statement_count());
    m.push("input.second.statements", o2.statement_count());
    m.push("result.converged", result.converged);
    m.push("result.iterations", result.iterations.len());
    m.push("result.instances", counts.0);
    m.push("result.relations", counts.1);
    m.push("result.classes", counts.2);
    m.push_iterations(&result.iterations);
    m.push("output.instances", INSTANCES_FILE);
    m.push("output.relations", RELATIONS_FILE);
    m.push("output.classes", CLASSES_FILE);
    std::fs::write(out.join(MANIFEST_FILE), m.render())
        .with_context(|| format!("writing manifest in {}", out.display()))
        .map_err(data)?;

    info!(
        "{} instance, {} relation, {} class alignments written to {}; converged: {} after {} iterations",
        counts.0,
        counts.1,
        counts.2,
        out.display(),
        result.converged,
        result.iterations.len()
    );
    if !result.converged {
        warn!("iteration limit reached before convergence");
    }
    Ok(AlignOutcome {
        converged: result.converged,
        iterations: result.iterations.len(),
        manifest: m,
    })
}

// ---------------------------------------------------------------------------
// eval

#[derive(Debug, Clone)]
pub struct EvalOutcome {
    pub metrics: Metrics,
    pub sweep: Option<String>,
}

fn fact_counts(o: &Ontology) -> HashMap<String, usize> {
    o.instances().map(|x| (o.lexical(x).to_string(), o.fact_count(x))).collect()
}

pub fn eval(args: &EvalArgs) -> Result<EvalOutcome, Failure> {
    require_file(&args.alignment, "alignment")?;
    require_file(&args.gold, "gold standard")?;
    let (rows, skipped) = read_alignment_file(&args.alignment).map_err(|e| data(e.into()))?;
    if skipped > 0 {
        warn!("{}: skipped {skipped} malformed rows", args.alignment.display());
    }
    let kind = match args.kind {
        KindArg::Instance => AlignmentKind::Instance,
        KindArg::Relation => AlignmentKind::Relation,
        KindArg::Class => AlignmentKind::Class,
    };
    let rows: Vec<_> = rows.into_iter().filter(|r| r.kind == kind).collect();
    let predicted: Vec<(String, String)> = rows.iter().map(|r| (r.left.clone(), r.right.clone())).collect();
    let gold = load_gold(&args.gold).map_err(|e| data(e.into()))?;

    let lefts: HashSet<&str> = gold.pairs.iter().map(|p| p.0.as_str()).collect();
    let rights: HashSet<&str> = gold.pairs.iter().map(|p| p.1.as_str()).collect();
    if !predicted.is_empty()
        && !predicted
            .iter()
            .any(|(l, r)| lefts.contains(l.as_str()) || rights.contains(r.as_str()))
    {
        warn!("no predicted identifier occurs in the gold standard; are the namespaces the same?");
    }

    let filter = match (args.min_facts, &args.second) {
        (Some(min_facts), Some(path)) => {
            require_file(path, "second ontology")?;
            let (o2, _) =
                load_ontology(&[path.clone()], Origin::Second, &LoadOptions::default()).map_err(|e| data(e.into()))?;
            Some(FactFilter {
                min_facts,
                fact_counts: fact_counts(&o2),
            })
        }
        _ => None,
    };
    let scope = match args.scope {
        ScopeArg::GoldCovered => Scope::GoldCovered,
        ScopeArg::All => Scope::All,
    };
    let gold_pairs: BTreeSet<(String, String)> = gold.pairs;
    let metrics = evaluate_pairs(&predicted, &gold_pairs, scope, filter.as_ref()).map_err(|e| data(e.into()))?;
    info!("{}", metrics.summary());

    let sweep = match &args.judgments {
        Some(path) => {
            require_file(path, "judgments")?;
            let file = File::open(path)
                .with_context(|| format!("opening {}", path.display()))
                .map_err(data)?;
            let (judged, bad) = read_judgments(BufReader::new(file))
                .with_context(|| format!("reading {}", path.display()))
                .map_err(data)?;
            if bad > 0 {
                warn!("{}: skipped {bad} malformed judgments", path.display());
            }
            let scored: Vec<(String, String, f64)> =
                rows.iter().map(|r| (r.left.clone(), r.right.clone(), r.score)).collect();
            let curve = evaluate_threshold_sweep(&scored, &judged).map_err(|e| data(e.into()))?;
            Some(sweep_to_tsv(&curve))
        }
        None => None,
    };

    let mut report = metrics.to_tsv();
    if let Some(s) = &sweep {
        report.push('\n');
        report.push_str(s);
    }
    match &args.report {
        Some(path) => std::fs::write(path, &report)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(data)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(report.as_bytes())
                .context("writing report")
                .map_err(data)?;
        }
    }
    Ok(EvalOutcome { metrics, sweep })
}

// ---------------------------------------------------------------------------
// generate, functionality

fn generate_cmd(args: &GenerateArgs) -> Result<(), Failure> {
    for (name, p) in [
        ("attribute-drop", args.attribute_drop),
        ("literal-perturbation", args.literal_perturbation),
        ("key-perturbation", args.key_perturbation),
    ] {
        if !(0.0..=1.0).contains(&p) {
            return Err(usage(format!("--{name} must lie in [0, 1], got {p}")));
        }
    }
    let cfg = GeneratorConfig {
        profile: args.profile,
        seed: args.seed,
        instances: args.instances,
        rename_all: !args.keep_names,
        attribute_drop: args.attribute_drop,
        literal_perturbation: args.literal_perturbation,
        key_perturbation: args.key_perturbation,
        format_drift: args.format_drift,
        split_relations: args.split_relations,
        merge_relations: args.merge_relations,
    };
    let fx = generate(&cfg);
    let paths = write_fixture(&fx, &args.out)
        .with_context(|| format!("writing fixture to {}", args.out.display()))
        .map_err(data)?;
    info!(
        "{}: {} + {} triples, {} gold instance pairs",
        args.out.display(),
        fx.first.len(),
        fx.second.len(),
        fx.gold_instances.len()
    );
    info!("wrote {} and {}", paths.first.display(), paths.second.display());
    Ok(())
}

fn functionality(args: &FunctionalityArgs) -> Result<(), Failure> {
    require_file(&args.ontology, "ontology")?;
    let (o, _) =
        load_ontology(&[args.ontology.clone()], Origin::First, &LoadOptions::default()).map_err(|e| data(e.into()))?;
    let tsv = FunctionalityTable::build(&o, args.mode).to_tsv(&o);
    match &args.output {
        Some(p) => std::fs::write(p, tsv)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(data),
        None => std::io::stdout()
            .lock()
            .write_all(tsv.as_bytes())
            .context("writing functionalities")
            .map_err(data),
    }
}
