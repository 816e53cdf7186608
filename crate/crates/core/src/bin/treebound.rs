use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use treebound::bounds::bounds_for;
use treebound::enumerate::free_trees;
use treebound::families::{build_f1_members, build_f2_member, build_f3, Family, FamilyKind, FamilyRecognizer};
use treebound::invariants::{domination_number, zeroth_order_general_randic};
use treebound::verify::{emit_report, verify, ReportFormat, VerifyConfig, DEFAULT_ALPHAS};
use treebound::{canonical_code, Tree};

#[derive(Parser)]
#[command(name = "treebound", version, about = "Degree-power index of trees versus domination number")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Json,
    Codes,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print every non-isomorphic tree of an order, one per line.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: TreeFormat,
    },
    /// Sum of d_v^alpha for a tree given as edge-list JSON.
    Index {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
    },
    /// Domination number with a minimum dominating set.
    Gamma {
        #[arg(long)]
        tree: PathBuf,
    },
    /// Applicable bounds as a JSON array.
    Bounds {
        #[arg(long)]
        order: usize,
        #[arg(long, required_unless_present = "all_gamma")]
        gamma: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// Every gamma from 1 to floor(order/2).
        #[arg(long)]
        all_gamma: bool,
    },
    /// Members of an extremal family as edge-list JSON, one per line.
    Family {
        #[arg(long)]
        kind: Family,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        gamma: usize,
        /// All non-isomorphic members instead of one.
        #[arg(long)]
        all: bool,
    },
    /// Certify the bounds over every tree in an order range.
    Verify {
        #[arg(long)]
        min_order: usize,
        #[arg(long)]
        max_order: usize,
        /// Comma-separated exponents.
        #[arg(long, allow_hyphen_values = true)]
        alphas: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_tree(path: &PathBuf) -> anyhow::Result<Tree> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Tree::from_json(&text)?)
}

fn parse_alphas(text: &str) -> anyhow::Result<Vec<f64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().with_context(|| format!("bad exponent `{s}`")))
        .collect()
}

fn family_members(kind: Family, n: usize, gamma: usize, all: bool) -> anyhow::Result<Vec<Tree>> {
    Ok(match (kind, all) {
        (Family::F1, true) => build_f1_members(n, gamma)?,
        (Family::F1, false) => build_f1_members(n, gamma)?.into_iter().take(1).collect(),
        (Family::F2, false) => vec![build_f2_member(n, gamma)?],
        (Family::F2, true) => {
            let recognizer = FamilyRecognizer::new(FamilyKind::new(Family::F2, n, gamma)?)?;
            let mut members = Vec::new();
            for tree in free_trees(n) {
                if recognizer.accepts(&tree)? {
                    members.push(tree);
                }
            }
            members
        }
        (Family::F3, _) => vec![build_f3(n, gamma)?],
    })
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Enumerate { order, format } => {
            if order == 0 {
                bail!("order must be at least 1");
            }
            for tree in free_trees(order) {
                match format {
                    TreeFormat::Json => writeln!(out, "{}", tree.to_json())?,
                    TreeFormat::Codes => writeln!(out, "{}", canonical_code(&tree))?,
                }
            }
        }
        Command::Index { tree, alpha } => {
            let tree = read_tree(&tree)?;
            let value = zeroth_order_general_randic(&tree, alpha)?;
            writeln!(out, "{}", json!({ "n": tree.order(), "alpha": alpha, "value": value }))?;
        }
        Command::Gamma { tree } => {
            let tree = read_tree(&tree)?;
            writeln!(out, "{}", serde_json::to_string(&domination_number(&tree))?)?;
        }
        Command::Bounds { order, gamma, alpha, all_gamma } => {
            let gammas: Vec<usize> = if all_gamma {
                (1..=order / 2).collect()
            } else {
                vec![gamma.expect("required by clap")]
            };
            let mut results = Vec::new();
            for g in gammas {
                for b in bounds_for(order, g, alpha)? {
                    let mut value = serde_json::to_value(b)?;
                    value["n"] = json!(order);
                    value["gamma"] = json!(g);
                    results.push(value);
                }
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&results)?)?;
        }
        Command::Family { kind, order, gamma, all } => {
            for tree in family_members(kind, order, gamma, all)? {
                writeln!(out, "{}", tree.to_json())?;
            }
        }
        Command::Verify { min_order, max_order, alphas, format, jobs, out: path } => {
            let alphas = match alphas {
                Some(text) => parse_alphas(&text)?,
                None => DEFAULT_ALPHAS.to_vec(),
            };
            let config = VerifyConfig { jobs: jobs.max(1), ..VerifyConfig::from_env()? };
            let reports = verify(min_order, max_order, &alphas, &config)?;
            let format = match format {
                OutFormat::Json => ReportFormat::Json,
                OutFormat::Csv => ReportFormat::Csv,
            };
            match path {
                Some(path) => {
                    let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    emit_report(&reports, format, BufWriter::new(file))?;
                }
                None => emit_report(&reports, format, &mut out)?,
            }
            let violations: usize = reports.iter().map(|r| r.violations()).sum();
            let trees: usize = reports.iter().filter(|r| r.alpha == alphas[0]).map(|r| r.tree_count()).sum();
            eprintln!(
                "checked {trees} trees over orders {min_order}..={max_order} at {} exponents: {violations} violations",
                alphas.len()
            );
            out.flush()?;
            return Ok(violations == 0);
        }
    }
    out.flush()?;
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
