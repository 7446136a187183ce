use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use lambda_bundle::formats::{
    graph_from_json, graph_to_dot, graph_to_json, labeling_from_str, labeling_to_grid_csv,
    labeling_to_json,
};
use lambda_bundle::{
    certify_theorem_instance, classify_shift, generate_labeling, make_bundle, solve_lambda, span,
    sweep, sweep_csv, verify_l21, Budget, BundleSpec, Error, Formula, FormulaParams, Graph,
    SolveStatus,
};

pub const BUDGET_ENV: &str = "LAMBDA_BUNDLE_BUDGET_SECS";

#[derive(Debug, Parser)]
#[command(
    name = "lambda-bundle",
    version,
    about = "L(2,1)-labelings of strong graph bundles of cycles over cycles"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Instance {
    /// Base cycle length (>= 3).
    #[arg(long)]
    m: usize,
    /// Fiber cycle length (>= 3).
    #[arg(long)]
    n: usize,
    /// Cyclic shift on the wrap edge, 0 <= shift < n.
    #[arg(long)]
    shift: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build C_m ⊠^σ C_n and write it as JSON or DOT.
    Build {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report which closed-form labeling, if any, applies to a shift.
    Classify {
        #[command(flatten)]
        instance: Instance,
    },
    /// Emit the closed-form labeling for an instance.
    Label {
        #[command(flatten)]
        instance: Instance,
        /// `auto` picks by classification; f1/f2/g1/g2 force a formula.
        #[arg(long, default_value = "auto")]
        formula: String,
        #[arg(long, value_enum, default_value_t = LabelFormat::Grid)]
        format: LabelFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling (JSON or grid CSV) against a graph JSON file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        /// Write the violation list as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compute λ of a graph JSON file by exact search.
    Lambda {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_secs: Option<u64>,
    },
    /// Print a λ = 10 certificate as JSON.
    Certify {
        #[command(flatten)]
        instance: Instance,
    },
    /// Label and verify every qualifying shift over a parameter range.
    Sweep {
        /// Inclusive range `A..B`.
        #[arg(long)]
        m_range: String,
        /// Comma-separated fiber lengths.
        #[arg(long, default_value = "11,22,33")]
        n_list: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LabelFormat {
    Grid,
    Json,
}

#[derive(Debug)]
pub enum Failure {
    /// Exit 1: the computation ran and the answer is negative.
    Domain(String),
    /// Exit 2: bad flags or unreadable input.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnqualifiedShift { .. }
            | Error::VerificationFailed(_)
            | Error::LowerBoundMismatch(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

impl Instance {
    fn validate(&self) -> CliResult<()> {
        for (name, len) in [("m", self.m), ("n", self.n)] {
            if len < 3 {
                return Err(Failure::Usage(format!(
                    "--{name} must be at least 3, got {len}"
                )));
            }
        }
        if self.shift >= self.n {
            return Err(Failure::Usage(format!(
                "--shift must be below n = {}, got {}",
                self.n, self.shift
            )));
        }
        Ok(())
    }

    fn graph(&self) -> CliResult<Graph> {
        Ok(make_bundle(&BundleSpec::shifted(
            self.m, self.n, self.shift,
        )?)?)
    }
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Build {
            instance,
            format,
            out,
        } => {
            instance.validate()?;
            let g = instance.graph()?;
            let text = match format {
                GraphFormat::Json => graph_to_json(&g) + "\n",
                GraphFormat::Dot => graph_to_dot(&g),
            };
            emit(out.as_deref(), &text)
        }
        Command::Classify { instance } => {
            instance.validate()?;
            let class = classify_shift(instance.m, instance.n, instance.shift)?;
            match class.formula {
                Some(f) => {
                    println!("{f} (residue {})", class.residue);
                    Ok(())
                }
                None => Err(Failure::Domain(format!(
                    "unqualified shift (residue {})",
                    class.residue
                ))),
            }
        }
        Command::Label {
            instance,
            formula,
            format,
            out,
        } => {
            instance.validate()?;
            let Instance { m, n, shift } = instance;
            let params = if formula.eq_ignore_ascii_case("auto") {
                FormulaParams::classified(m, n, shift)?
            } else {
                let f: Formula = formula.parse()?;
                let params = FormulaParams::forced(m, n, shift, f)?;
                if params.is_forced() {
                    eprintln!(
                        "warning: {f} forced on an unqualified shift; the labeling is unverified"
                    );
                }
                params
            };
            let labeling = generate_labeling(&params);
            let text = match format {
                LabelFormat::Grid => labeling_to_grid_csv(&labeling, m, n)?,
                LabelFormat::Json => labeling_to_json(&labeling) + "\n",
            };
            emit(out.as_deref(), &text)
        }
        Command::Verify {
            graph,
            labeling,
            report,
        } => {
            let g = graph_from_json(&read(&graph)?)?;
            let f = labeling_from_str(&read(&labeling)?)?;
            let violations = verify_l21(&g, &f)?;
            if let Some(path) = report {
                let json = serde_json::to_string_pretty(&violations).expect("violations serialize");
                write(&path, &(json + "\n"))?;
            }
            if violations.is_empty() {
                println!("valid, span {}", span(&f)?);
                Ok(())
            } else {
                for v in &violations {
                    let kind = match v.kind {
                        lambda_bundle::ViolationKind::AdjacentGap => "adjacent-gap",
                        lambda_bundle::ViolationKind::Distance2Equal => "distance2-equal",
                    };
                    println!(
                        "{kind} {} {} labels {} {}",
                        v.pair.0, v.pair.1, v.labels.0, v.labels.1
                    );
                }
                Err(Failure::Domain(format!(
                    "invalid labeling: {} violations",
                    violations.len()
                )))
            }
        }
        Command::Lambda {
            graph,
            budget_nodes,
            budget_secs,
        } => {
            let g = graph_from_json(&read(&graph)?)?;
            let budget = budget_from(budget_nodes, budget_secs)?;
            let r = solve_lambda(&g, None, budget)?;
            match r.status {
                SolveStatus::Exact => println!(
                    "lambda = {} ({} nodes)",
                    r.lambda.expect("exact result carries lambda"),
                    r.nodes_explored
                ),
                SolveStatus::Timeout { lower, upper } => println!(
                    "timeout after {} nodes: lambda in [{lower}, {upper}]",
                    r.nodes_explored
                ),
                SolveStatus::AboveLimit { lower } => println!("lambda >= {lower}"),
            }
            Ok(())
        }
        Command::Certify { instance } => {
            instance.validate()?;
            let cert = certify_theorem_instance(instance.m, instance.n, instance.shift)?;
            println!(
                "{}",
                serde_json::to_string(&cert).expect("certificate serializes")
            );
            Ok(())
        }
        Command::Sweep {
            m_range,
            n_list,
            out,
        } => {
            let (lo, hi) = parse_range(&m_range)?;
            let ns = parse_list(&n_list)?;
            if lo <= hi && lo < 3 {
                return Err(Failure::Usage(format!("m must be at least 3, got {lo}")));
            }
            if let Some(&bad) = ns.iter().find(|&&n| n < 3) {
                return Err(Failure::Usage(format!("n must be at least 3, got {bad}")));
            }
            let rows = sweep(lo..=hi, &ns)?;
            emit(out.as_deref(), &sweep_csv(&rows))
        }
    }
}

fn budget_from(nodes: Option<u64>, secs: Option<u64>) -> CliResult<Budget> {
    let secs = match secs {
        Some(s) => s,
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| {
                Failure::Usage(format!("{BUDGET_ENV} must be an integer, got {v:?}"))
            })?,
            Err(_) => Budget::DEFAULT_SECS,
        },
    };
    Ok(Budget::new(
        nodes.unwrap_or(Budget::DEFAULT_NODES),
        Duration::from_secs(secs),
    ))
}

fn parse_range(s: &str) -> CliResult<(usize, usize)> {
    let bad = || Failure::Usage(format!("expected a range like 3..16, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b
        .trim_start_matches('=')
        .trim()
        .parse()
        .map_err(|_| bad())?;
    Ok((a, b))
}

fn parse_list(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad fiber length {x:?}")))
        })
        .collect()
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
