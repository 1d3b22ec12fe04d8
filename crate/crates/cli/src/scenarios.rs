//! Scenario registry and runner.
//!
//! | scenario | group | subgroup | D | pool |
//! |---|---|---|---|---|
//! | `prop5.1` | `counterexample` | `t` | 1 | `pool_size` 100: cosets of `emb_W(1/2), …, emb_W(1/(m+1))` |
//! | `lemma5.4` | `zstarz2-wreath` | `q` | 4 | `positions`, default `0..pool_size` (10) |
//! | `heisenberg-center` | `heisenberg` | `center` | 1,2,3,4 | ball of radius 6 |
//! | `zn-diagonal` | `zn:2` | `diagonal` | 1 | ball of radius 4 |
//! | `split-modk` | `split:2,1;1,1` | `h1` | 1 | ball of radius 4 |
//! | `normal-w` | `counterexample` | `w` | 1,2 | ball of radius 3 |
//! | `intersection-zn` | `zn:2` | `meet:diagonal&lattice:2,0;0,1` | 1,2 | ball of radius 4 |
//! | `pullback-w` | `counterexample` | `pullback` | 1,2 | ball of radius 3 |
//!
//! Ball pools may instead be sized with `pool_size`, taking the first
//! elements in ball order. Every row attempts a certificate from the
//! group's quotient family and reports `none` when there is none.

use std::time::Instant;

use cosetpack_core::certificates::{CertificateReport, CertifyError};
use cosetpack_core::checks;
use cosetpack_core::coset::{
    dedup_cosets, lemma54_family, result_from_instance, CosetError, CosetGeometry, PackingInstance, SearchSettings,
    SubgroupDesc,
};
use cosetpack_core::{Ball, Execution, Group, GroupError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::config::{ConfigError, ScenarioConfig};
use crate::registry::{group_from_key, AnyGroup, Registered, RegistryError};
use crate::report::ReportRow;
use crate::with_group;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error("{0}")]
    Failed(String),
}

impl ScenarioError {
    /// 1 for anything wrong with the input, which is every error a
    /// scenario can return.
    pub fn exit_code(&self) -> i32 {
        1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunOptions {
    pub execution: Execution,
    /// Overrides `budget_nodes` from the config.
    pub budget_nodes: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioOutput {
    pub rows: Vec<ReportRow>,
    /// One message per budget fallback. Non-empty means some radius was
    /// truncated; `--strict` turns that into exit code 2.
    pub budget_notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PoolKind {
    Ball(u32),
    BallSize(usize),
    Rationals(usize),
    Positions(usize),
}

struct Defaults {
    group: &'static str,
    subgroup: &'static str,
    d: &'static [u32],
    pool: PoolKind,
}

pub const SCENARIOS: &[&str] = &[
    "prop5.1",
    "lemma5.4",
    "heisenberg-center",
    "zn-diagonal",
    "split-modk",
    "normal-w",
    "intersection-zn",
    "pullback-w",
];

fn defaults(scenario: &str) -> Option<Defaults> {
    let (group, subgroup, d, pool) = match scenario {
        "prop5.1" => ("counterexample", "t", &[1][..], PoolKind::Rationals(100)),
        "lemma5.4" => ("zstarz2-wreath", "q", &[4][..], PoolKind::Positions(10)),
        "heisenberg-center" => ("heisenberg", "center", &[1, 2, 3, 4][..], PoolKind::Ball(6)),
        "zn-diagonal" => ("zn:2", "diagonal", &[1][..], PoolKind::Ball(4)),
        "split-modk" => ("split:2,1;1,1", "h1", &[1][..], PoolKind::Ball(4)),
        "normal-w" => ("counterexample", "w", &[1, 2][..], PoolKind::Ball(3)),
        "intersection-zn" => ("zn:2", "meet:diagonal&lattice:2,0;0,1", &[1, 2][..], PoolKind::Ball(4)),
        "pullback-w" => ("counterexample", "pullback", &[1, 2][..], PoolKind::Ball(3)),
        _ => return None,
    };
    Some(Defaults {
        group,
        subgroup,
        d,
        pool,
    })
}

/// Settings resolved from a config and its scenario defaults.
struct Plan {
    scenario: String,
    group: String,
    subgroup: String,
    ds: Vec<u32>,
    pool: PoolKind,
    budget: usize,
    settings: SearchSettings,
    clique_nodes: u64,
    seed: u64,
    positions: Option<Vec<i64>>,
}

fn plan(cfg: &ScenarioConfig, opts: RunOptions) -> Result<Plan, ConfigError> {
    let def = defaults(&cfg.scenario).ok_or_else(|| {
        ConfigError::new(
            0,
            "scenario",
            format!("unknown scenario {:?}; known: {}", cfg.scenario, SCENARIOS.join(", ")),
        )
    })?;
    let pool = match (def.pool, cfg.pool_radius, cfg.pool_size) {
        (PoolKind::Rationals(_), Some(_), _) | (PoolKind::Positions(_), Some(_), _) => {
            return Err(ConfigError::new(
                0,
                "pool_radius",
                format!("{} takes pool_size", cfg.scenario),
            ));
        }
        (PoolKind::Rationals(_), _, Some(n)) => PoolKind::Rationals(n),
        (PoolKind::Positions(_), _, Some(n)) => PoolKind::Positions(n),
        (PoolKind::Ball(_) | PoolKind::BallSize(_), Some(r), _) => PoolKind::Ball(r),
        (PoolKind::Ball(_) | PoolKind::BallSize(_), _, Some(n)) => PoolKind::BallSize(n),
        (kind, None, None) => kind,
    };
    if cfg.positions.is_some() && !matches!(pool, PoolKind::Positions(_)) {
        return Err(ConfigError::new(
            0,
            "positions",
            format!("{} does not take positions", cfg.scenario),
        ));
    }
    if cfg.positions.is_some() && cfg.pool_size.is_some() {
        return Err(ConfigError::new(
            0,
            "positions",
            "give positions or pool_size, not both",
        ));
    }
    let ds = cfg.d.clone().unwrap_or_else(|| def.d.to_vec());
    let max_d = ds.iter().copied().max().unwrap_or(0);
    let ambient = cfg.ambient_radius.unwrap_or(max_d);
    let budget = opts.budget_nodes.unwrap_or(cfg.budget_nodes);
    Ok(Plan {
        scenario: cfg.scenario.clone(),
        group: cfg.group.clone().unwrap_or_else(|| def.group.to_string()),
        subgroup: cfg.subgroup.clone().unwrap_or_else(|| def.subgroup.to_string()),
        ds,
        pool,
        budget,
        settings: SearchSettings {
            ambient_radius: ambient,
            subgroup_radius: cfg.subgroup_radius,
            // lengths beyond the ambient ball never matter for radii up to max D
            length_cutoff: ambient,
            node_budget: budget,
            execution: opts.execution,
        },
        clique_nodes: cfg.clique_nodes,
        seed: cfg.seed,
        positions: cfg.positions.as_ref().map(|p| p.to_vec()),
    })
}

/// Ball of radius `r`, falling back to the largest completed radius when
/// the budget runs out.
fn ball_with_fallback<G: Group>(
    group: &G,
    r: u32,
    budget: usize,
    exec: Execution,
    notes: &mut Vec<String>,
    what: &str,
) -> Result<Ball<G::Element>, ScenarioError> {
    match Ball::enumerate(group, group.generators(), r, budget, exec) {
        Ok(b) => Ok(b),
        Err(GroupError::BallBudget { budget, radius_reached }) => {
            notes.push(format!(
                "{what}: radius {r} exceeds the budget of {budget}; using radius {radius_reached}"
            ));
            Ball::enumerate(group, group.generators(), radius_reached, budget, exec)
                .map_err(|e| ScenarioError::Failed(e.to_string()))
        }
        Err(e) => Err(ScenarioError::Failed(e.to_string())),
    }
}

/// The first `n` elements in ball order.
fn sized_ball_pool<G: Group>(
    group: &G,
    n: usize,
    budget: usize,
    exec: Execution,
    notes: &mut Vec<String>,
) -> Vec<G::Element> {
    let mut r = 0;
    loop {
        match Ball::enumerate(group, group.generators(), r, budget, exec) {
            Ok(b) if b.len() >= n => return b.elements()[..n].to_vec(),
            Ok(_) => r += 1,
            Err(GroupError::BallBudget { radius_reached, .. }) => {
                let b = Ball::enumerate(group, group.generators(), radius_reached, budget, exec)
                    .expect("completed radius fits the budget");
                notes.push(format!("pool: {n} elements exceed the budget; using {}", b.len()));
                return b.elements().to_vec();
            }
            Err(e) => unreachable!("{e}"),
        }
    }
}

/// Seeded spot checks of the subgroup description before it is used.
fn sample_subgroup<G: Group>(group: &G, sub: &SubgroupDesc<G::Element>, seed: u64) -> Result<(), ScenarioError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = sub.generators();
    let word = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(0..5);
        (0..len).fold(group.identity(), |acc, _| {
            if gens.is_empty() {
                return acc;
            }
            let h = &gens[rng.gen_range(0..gens.len())];
            let h = if rng.gen() { h.clone() } else { group.inv(h) };
            group.mul(&acc, &h)
        })
    };
    for _ in 0..32 {
        let (h1, h2) = (word(&mut rng), word(&mut rng));
        let (l1, l2) = (rng.gen_range(0..6), rng.gen_range(0..6));
        let g1 = group.random_element(&mut rng, l1);
        let g2 = group.random_element(&mut rng, l2);
        checks::subgroup_sample(group, sub, &h1, &h2, &g1, &g2)
            .map_err(|e| ScenarioError::Failed(format!("subgroup {} failed a sampled check: {e}", sub.name())))?;
    }
    Ok(())
}

fn rows_from_instance<E: Clone, F>(
    plan: &Plan,
    instance: &PackingInstance<E>,
    start: Instant,
    mut cert: F,
) -> Result<Vec<ReportRow>, ScenarioError>
where
    F: FnMut(u32) -> Option<u64>,
{
    let mut rows = Vec::new();
    for &d in &plan.ds {
        let res = result_from_instance(instance.clone(), d, plan.clique_nodes);
        let row = ReportRow {
            scenario: plan.scenario.clone(),
            d,
            family_size: instance.len(),
            clique_lower: res.lower_bound(),
            cert_upper: cert(d),
            max_witness_len: res.max_witness_len(),
            elapsed_ms: start.elapsed().as_millis() as u64,
        };
        if !row.consistent() {
            return Err(ScenarioError::Failed(format!(
                "clique {} exceeds certificate {:?} at D={d}",
                row.clique_lower, row.cert_upper
            )));
        }
        rows.push(row);
    }
    Ok(rows)
}

fn certificate_bound<G: Registered>(
    group: &G,
    sub: &SubgroupDesc<G::Element>,
    d: u32,
    plan: &Plan,
    notes: &mut Vec<String>,
) -> Option<u64> {
    match group.certify(sub, d, plan.budget, plan.settings.execution) {
        Ok(c) => Some(c.bound),
        Err(CertifyError::Group(GroupError::BallBudget { budget, .. })) => {
            notes.push(format!(
                "certificate at D={d}: separation ball exceeds the budget of {budget}"
            ));
            None
        }
        Err(_) => None,
    }
}

fn run_generic<G: Registered>(group: &G, plan: &Plan) -> Result<ScenarioOutput, ScenarioError> {
    let start = Instant::now();
    let mut notes = Vec::new();
    let sub = group.subgroup(&plan.subgroup)?;
    sample_subgroup(group, &sub, plan.seed)?;
    let exec = plan.settings.execution;
    let pool: Vec<G::Element> = match plan.pool {
        PoolKind::Ball(r) => ball_with_fallback(group, r, plan.budget, exec, &mut notes, "pool")?
            .elements()
            .to_vec(),
        PoolKind::BallSize(n) => sized_ball_pool(group, n, plan.budget, exec, &mut notes),
        PoolKind::Rationals(n) => group
            .rational_family(n)
            .ok_or_else(|| ConfigError::new(0, "group", format!("{} needs the counterexample group", plan.scenario)))?,
        PoolKind::Positions(_) => unreachable!("wreath scenarios are handled separately"),
    };
    let geo = match CosetGeometry::new(group, &sub, plan.settings) {
        Err(CosetError::Group(GroupError::BallBudget { budget, radius_reached })) => {
            notes.push(format!(
                "ambient ball: radius {} exceeds the budget of {budget}; using radius {radius_reached}",
                plan.settings.ambient_radius
            ));
            let settings = SearchSettings {
                ambient_radius: radius_reached,
                length_cutoff: radius_reached,
                ..plan.settings
            };
            CosetGeometry::new(group, &sub, settings)
        }
        other => other,
    }
    .map_err(|e| ScenarioError::Failed(e.to_string()))?;
    let family = dedup_cosets(group, &sub, &pool);
    let max_d = plan.ds.iter().copied().max().unwrap_or(0);
    let instance = PackingInstance::compute(&geo, max_d, family);
    let rows = rows_from_instance(plan, &instance, start, |d| {
        certificate_bound(group, &sub, d, plan, &mut notes)
    })?;
    Ok(ScenarioOutput {
        rows,
        budget_notes: notes,
    })
}

fn run_wreath(group: &AnyGroup, plan: &Plan) -> Result<ScenarioOutput, ScenarioError> {
    let AnyGroup::Wreath(g) = group else {
        return Err(ConfigError::new(0, "group", format!("{} needs zstarz2-wreath", plan.scenario)).into());
    };
    if plan.subgroup != "q" {
        return Err(ConfigError::new(0, "subgroup", format!("{} uses the acting subgroup q", plan.scenario)).into());
    }
    let start = Instant::now();
    let positions = match (&plan.positions, plan.pool) {
        (Some(p), _) => p.clone(),
        (None, PoolKind::Positions(n)) => (0..n as i64).collect(),
        _ => unreachable!(),
    };
    let instance =
        lemma54_family(g, 1, &positions, plan.settings.execution).map_err(|e| ScenarioError::Failed(e.to_string()))?;
    let rows = rows_from_instance(plan, &instance, start, |_| None)?;
    Ok(ScenarioOutput {
        rows,
        budget_notes: Vec::new(),
    })
}

pub fn run_scenario(cfg: &ScenarioConfig, opts: RunOptions) -> Result<ScenarioOutput, ScenarioError> {
    let plan = plan(cfg, opts)?;
    let group = group_from_key(&plan.group)?;
    if matches!(plan.pool, PoolKind::Positions(_)) {
        return run_wreath(&group, &plan);
    }
    with_group!(&group, g => run_generic(g, &plan))
}

/// A certificate, or the reason there is none, for one radius.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum CertifyOutcome {
    Certified(CertificateReport),
    Refused {
        group: String,
        subgroup: String,
        #[serde(rename = "D")]
        d: u32,
        error: String,
    },
}

pub fn certify_scenario(
    cfg: &ScenarioConfig,
    opts: RunOptions,
) -> Result<(Vec<CertifyOutcome>, Vec<String>), ScenarioError> {
    let plan = plan(cfg, opts)?;
    let group = group_from_key(&plan.group)?;
    with_group!(&group, g => {
        let sub = g.subgroup(&plan.subgroup)?;
        let mut notes = Vec::new();
        let mut out = Vec::new();
        for &d in &plan.ds {
            match g.certify(&sub, d, plan.budget, plan.settings.execution) {
                Ok(c) => out.push(CertifyOutcome::Certified(c.report(&g.name(), sub.name()))),
                Err(e) => {
                    if let CertifyError::Group(GroupError::BallBudget { .. }) = e {
                        notes.push(format!("certificate at D={d}: {e}"));
                    }
                    out.push(CertifyOutcome::Refused {
                        group: g.name(),
                        subgroup: sub.name().to_string(),
                        d,
                        error: e.to_string(),
                    });
                }
            }
        }
        Ok((out, notes))
    })
}
