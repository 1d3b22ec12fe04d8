use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cosetpack_cli::registry::{group_from_key, Registered};
use cosetpack_cli::{
    certify_scenario, emit_report, parse_config, run_scenario, with_group, Format, RunOptions, ScenarioConfig,
};
use cosetpack_core::coset::{CosetDistance, CosetGeometry, SearchSettings};
use cosetpack_core::group::DEFAULT_NODE_BUDGET;
use cosetpack_core::{par, Ball, Execution, Group, GroupError, WordLength};
use serde::Serialize;

/// Word metrics, coset distances and packing numbers in concrete groups.
#[derive(Parser)]
#[command(name = "cosetpack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "csv", global = true)]
    format: Format,
    /// Exit with status 2 when any budget forced a smaller radius.
    #[arg(long, global = true)]
    strict: bool,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Element budget for ball enumerations, overriding configs.
    #[arg(long, global = true)]
    budget_nodes: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run scenario configs and print one report.
    Run { configs: Vec<PathBuf> },
    /// Sphere and ball sizes up to a radius.
    Ball { group: String, radius: u32 },
    /// Coset distance between g1·H and g2·H with a witness.
    Dist {
        group: String,
        subgroup: String,
        g1: String,
        g2: String,
        /// Radius of the cached ambient ball.
        #[arg(long, default_value_t = 6)]
        radius: u32,
    },
    /// Certificates for every D of a config, as JSON.
    Certify { config: PathBuf },
}

/// Exit status 1 with a message.
struct Invalid(String);

impl<E: std::fmt::Display> From<E> for Invalid {
    fn from(e: E) -> Self {
        Invalid(e.to_string())
    }
}

struct Output {
    bytes: Vec<u8>,
    budget_notes: Vec<String>,
}

fn read_config(path: &Path) -> Result<ScenarioConfig, Invalid> {
    let text = std::fs::read_to_string(path).map_err(|e| Invalid(format!("{}: {e}", path.display())))?;
    parse_config(&text).map_err(|e| Invalid(format!("{}: {e}", path.display())))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn emit_records<T: Serialize>(records: &[T], header: &[&str], format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(records).expect("records serialize");
            out.push(b'\n');
            out
        }
        Format::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for r in records {
                let value = serde_json::to_value(r).expect("records serialize");
                let fields: Vec<String> = header
                    .iter()
                    .map(|k| match &value[*k] {
                        serde_json::Value::String(s) => csv_field(s),
                        v => csv_field(&v.to_string()),
                    })
                    .collect();
                out.push_str(&fields.join(","));
                out.push('\n');
            }
            out.into_bytes()
        }
    }
}

fn run(configs: &[PathBuf], cli: &Cli, opts: RunOptions) -> Result<Output, Invalid> {
    if configs.is_empty() {
        return Err(Invalid("run needs at least one config".into()));
    }
    let parsed = configs.iter().map(|p| read_config(p)).collect::<Result<Vec<_>, _>>()?;
    let outputs = par::map(opts.execution, &parsed, |cfg| run_scenario(cfg, opts));
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for (out, path) in outputs.into_iter().zip(configs) {
        let out = out.map_err(|e| Invalid(format!("{}: {e}", path.display())))?;
        rows.extend(out.rows);
        notes.extend(out.budget_notes);
    }
    Ok(Output {
        bytes: emit_report(&rows, cli.format),
        budget_notes: notes,
    })
}

#[derive(Serialize)]
struct BallRow {
    radius: u32,
    sphere_size: usize,
    ball_size: usize,
}

fn ball(key: &str, radius: u32, cli: &Cli, opts: RunOptions) -> Result<Output, Invalid> {
    let group = group_from_key(key)?;
    let budget = opts.budget_nodes.unwrap_or(DEFAULT_NODE_BUDGET);
    let mut notes = Vec::new();
    let spheres = with_group!(&group, g => {
        let b = match Ball::enumerate(g, g.generators(), radius, budget, opts.execution) {
            Err(GroupError::BallBudget { radius_reached, .. }) => {
                notes.push(format!("radius {radius} exceeds the budget of {budget}; stopped at {radius_reached}"));
                Ball::enumerate(g, g.generators(), radius_reached, budget, opts.execution)?
            }
            other => other?,
        };
        b.sphere_sizes()
    });
    let mut total = 0;
    let rows: Vec<BallRow> = spheres
        .iter()
        .enumerate()
        .map(|(r, &s)| {
            total += s;
            BallRow {
                radius: r as u32,
                sphere_size: s,
                ball_size: total,
            }
        })
        .collect();
    Ok(Output {
        bytes: emit_records(&rows, &["radius", "sphere_size", "ball_size"], cli.format),
        budget_notes: notes,
    })
}

#[derive(Serialize)]
struct DistRow {
    group: String,
    subgroup: String,
    g1: String,
    g2: String,
    upper: String,
    exact: String,
    h1: String,
    h2: String,
    value: String,
}

const DIST_HEADER: &[&str] = &["group", "subgroup", "g1", "g2", "upper", "exact", "h1", "h2", "value"];

fn dist(args: [&str; 4], radius: u32, cli: &Cli, opts: RunOptions) -> Result<Output, Invalid> {
    let [key, sub_key, l1, l2] = args;
    let group = group_from_key(key)?;
    let row = with_group!(&group, g => {
        let sub = g.subgroup(sub_key)?;
        let (g1, g2) = (g.parse_element(l1)?, g.parse_element(l2)?);
        let settings = SearchSettings {
            ambient_radius: radius,
            node_budget: opts.budget_nodes.unwrap_or(DEFAULT_NODE_BUDGET),
            execution: opts.execution,
            ..SearchSettings::default()
        };
        let geo = CosetGeometry::new(g, &sub, settings)?;
        let exact = match geo.coset_distance_exact(&g1, &g2, settings.length_cutoff) {
            Ok(WordLength::Exact(n)) => n.to_string(),
            Ok(WordLength::Unknown) => "unknown".to_string(),
            Err(_) => "n/a".to_string(),
        };
        let (upper, h1, h2, value) = match geo.coset_distance_upper(&g1, &g2) {
            CosetDistance::Bounded(w) => (w.length.to_string(), w.h1.to_string(), w.h2.to_string(), w.value.to_string()),
            CosetDistance::Unknown => ("unknown".into(), String::new(), String::new(), String::new()),
        };
        DistRow {
            group: g.name(),
            subgroup: sub.name().to_string(),
            g1: g1.to_string(),
            g2: g2.to_string(),
            upper,
            exact,
            h1,
            h2,
            value,
        }
    });
    Ok(Output {
        bytes: emit_records(&[row], DIST_HEADER, cli.format),
        budget_notes: Vec::new(),
    })
}

fn certify(path: &Path, opts: RunOptions) -> Result<Output, Invalid> {
    let cfg = read_config(path)?;
    let (outcomes, notes) = certify_scenario(&cfg, opts).map_err(|e| Invalid(format!("{}: {e}", path.display())))?;
    let mut bytes = serde_json::to_vec_pretty(&outcomes).expect("reports serialize");
    bytes.push(b'\n');
    Ok(Output {
        bytes,
        budget_notes: notes,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let execution = match cli.jobs {
        Some(0) => {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        Some(1) => Execution::Sequential,
        Some(n) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            Execution::Parallel
        }
        None => Execution::default(),
    };
    let opts = RunOptions {
        execution,
        budget_nodes: cli.budget_nodes,
    };
    let result = match &cli.command {
        Command::Run { configs } => run(configs, &cli, opts),
        Command::Ball { group, radius } => ball(group, *radius, &cli, opts),
        Command::Dist {
            group,
            subgroup,
            g1,
            g2,
            radius,
        } => dist([group, subgroup, g1, g2], *radius, &cli, opts),
        Command::Certify { config } => certify(config, opts),
    };
    match result {
        Ok(out) => {
            std::io::stdout().write_all(&out.bytes).expect("stdout");
            for n in &out.budget_notes {
                eprintln!("budget: {n}");
            }
            if cli.strict && !out.budget_notes.is_empty() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
