//! Scenario configuration files.
//!
//! A config is flat `key=value` text, one pair per line. Blank lines and
//! anything after `#` are ignored. Keys:
//!
//! | key | meaning | default |
//! |---|---|---|
//! | `scenario` | scenario name (required) | |
//! | `group` | registry key of the ambient group | per scenario |
//! | `subgroup` | registry key of the subgroup | per scenario |
//! | `D` | comma separated radii | per scenario |
//! | `pool_radius` | pool = ball of this radius | per scenario |
//! | `pool_size` | pool = first elements of the scenario family | |
//! | `positions` | `a..b` or a comma list (lemma5.4 only) | `0..pool_size` |
//! | `budget_nodes` | element budget for every ball enumeration | 2000000 |
//! | `clique_nodes` | branch-and-bound node limit | 10000000 |
//! | `seed` | seed for the sampled subgroup checks | 0 |
//! | `ambient_radius` | cached ambient ball radius | max of `D` |
//! | `subgroup_radius` | subgroup word radius for generic witnesses | 4 |
//!
//! All integers are non-negative. Unknown and repeated keys are rejected.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

pub const DEFAULT_BUDGET_NODES: usize = 2_000_000;
pub const DEFAULT_CLIQUE_NODES: u64 = 10_000_000;
pub const DEFAULT_SUBGROUP_RADIUS: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: key {key:?}: {message}")]
pub struct ConfigError {
    /// 1-based; 0 when the problem is not tied to a line.
    pub line: usize,
    pub key: String,
    pub message: String,
}

impl ConfigError {
    pub fn new(line: usize, key: &str, message: impl fmt::Display) -> Self {
        ConfigError {
            line,
            key: key.to_string(),
            message: message.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Positions {
    Range(i64, i64),
    List(Vec<i64>),
}

impl Positions {
    pub fn to_vec(&self) -> Vec<i64> {
        match self {
            Positions::Range(a, b) => (*a..*b).collect(),
            Positions::List(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioConfig {
    pub scenario: String,
    pub group: Option<String>,
    pub subgroup: Option<String>,
    pub d: Option<Vec<u32>>,
    pub pool_radius: Option<u32>,
    pub pool_size: Option<usize>,
    pub positions: Option<Positions>,
    pub budget_nodes: usize,
    pub clique_nodes: u64,
    pub seed: u64,
    pub ambient_radius: Option<u32>,
    pub subgroup_radius: u32,
}

impl ScenarioConfig {
    pub fn new(scenario: &str) -> Self {
        ScenarioConfig {
            scenario: scenario.to_string(),
            group: None,
            subgroup: None,
            d: None,
            pool_radius: None,
            pool_size: None,
            positions: None,
            budget_nodes: DEFAULT_BUDGET_NODES,
            clique_nodes: DEFAULT_CLIQUE_NODES,
            seed: 0,
            ambient_radius: None,
            subgroup_radius: DEFAULT_SUBGROUP_RADIUS,
        }
    }
}

const KEYS: &[&str] = &[
    "scenario",
    "group",
    "subgroup",
    "D",
    "pool_radius",
    "pool_size",
    "positions",
    "budget_nodes",
    "clique_nodes",
    "seed",
    "ambient_radius",
    "subgroup_radius",
];

fn number<T: std::str::FromStr>(line: usize, key: &str, value: &str) -> Result<T, ConfigError> {
    if value.starts_with('-') {
        return Err(ConfigError::new(
            line,
            key,
            format!("must be non-negative, got {value}"),
        ));
    }
    value
        .parse()
        .map_err(|_| ConfigError::new(line, key, format!("expected a non-negative integer, got {value:?}")))
}

fn positions(line: usize, value: &str) -> Result<Positions, ConfigError> {
    let int = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| ConfigError::new(line, "positions", format!("bad integer {s:?}")))
    };
    let p = if let Some((a, b)) = value.split_once("..") {
        let (a, b) = (int(a)?, int(b)?);
        if a > b {
            return Err(ConfigError::new(line, "positions", "empty range"));
        }
        Positions::Range(a, b)
    } else {
        Positions::List(value.split(',').map(int).collect::<Result<_, _>>()?)
    };
    let v = p.to_vec();
    if v.iter().collect::<HashSet<_>>().len() != v.len() {
        return Err(ConfigError::new(line, "positions", "positions must be distinct"));
    }
    Ok(p)
}

pub fn parse_config(text: &str) -> Result<ScenarioConfig, ConfigError> {
    let mut cfg = ScenarioConfig::new("");
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(ConfigError::new(line, content, "expected key=value"));
        };
        let (key, value) = (key.trim(), value.trim());
        if !KEYS.contains(&key) {
            return Err(ConfigError::new(line, key, "unknown key"));
        }
        if !seen.insert(key.to_string()) {
            return Err(ConfigError::new(line, key, "duplicate key"));
        }
        if value.is_empty() {
            return Err(ConfigError::new(line, key, "empty value"));
        }
        match key {
            "scenario" => cfg.scenario = value.to_string(),
            "group" => cfg.group = Some(value.to_string()),
            "subgroup" => cfg.subgroup = Some(value.to_string()),
            "D" => {
                let ds = value
                    .split(',')
                    .map(|s| number(line, key, s.trim()))
                    .collect::<Result<Vec<u32>, _>>()?;
                cfg.d = Some(ds);
            }
            "pool_radius" => cfg.pool_radius = Some(number(line, key, value)?),
            "pool_size" => cfg.pool_size = Some(number(line, key, value)?),
            "positions" => cfg.positions = Some(positions(line, value)?),
            "budget_nodes" => cfg.budget_nodes = number(line, key, value)?,
            "clique_nodes" => cfg.clique_nodes = number(line, key, value)?,
            "seed" => cfg.seed = number(line, key, value)?,
            "ambient_radius" => cfg.ambient_radius = Some(number(line, key, value)?),
            "subgroup_radius" => cfg.subgroup_radius = number(line, key, value)?,
            _ => unreachable!(),
        }
    }
    if cfg.scenario.is_empty() {
        return Err(ConfigError::new(0, "scenario", "missing"));
    }
    if cfg.pool_radius.is_some() && cfg.pool_size.is_some() {
        return Err(ConfigError::new(
            0,
            "pool_size",
            "give pool_radius or pool_size, not both",
        ));
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal() {
        let cfg = parse_config("scenario=prop5.1\nD=1\npool_size=10").unwrap();
        assert_eq!(cfg.scenario, "prop5.1");
        assert_eq!(cfg.d, Some(vec![1]));
        assert_eq!(cfg.pool_size, Some(10));
        assert_eq!(cfg.budget_nodes, DEFAULT_BUDGET_NODES);
    }

    #[test]
    fn comments_and_lists() {
        let cfg = parse_config("# header\nscenario = lemma5.4 # trailing\n\nD=1, 2,3\npositions=-3..4\n").unwrap();
        assert_eq!(cfg.d, Some(vec![1, 2, 3]));
        assert_eq!(cfg.positions.unwrap().to_vec(), (-3..4).collect::<Vec<_>>());
    }

    #[test]
    fn errors_name_key_and_line() {
        let e = parse_config("scenario=x\nD=-1").unwrap_err();
        assert_eq!((e.line, e.key.as_str()), (2, "D"));
        let e = parse_config("foo=1").unwrap_err();
        assert_eq!((e.line, e.key.as_str()), (1, "foo"));
        assert!(e.to_string().contains("foo"));
        let e = parse_config("scenario=x\nseed=1\nseed=2").unwrap_err();
        assert_eq!((e.line, e.key.as_str()), (3, "seed"));
        let e = parse_config("scenario=x\npositions=1,2,1").unwrap_err();
        assert_eq!(e.key, "positions");
        assert_eq!(parse_config("D=1").unwrap_err().key, "scenario");
        assert_eq!(parse_config("scenario=x\npool_size=abc").unwrap_err().key, "pool_size");
    }
}
