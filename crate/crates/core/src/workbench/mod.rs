//! Reports, single-diagram analysis and the named verification suites behind the CLI.

pub mod criteria;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::cgroup::{classify, intersection_profile, is_string_cgroup_instance, CGroupVerdict};
use crate::cgroup::{Classification, IntersectionProfile};
use crate::coxeter::{is_generic, CoxeterDiagram};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matgroup::{enumerate, EnumCache, DEFAULT_ENUM_CAP};
use crate::polytope::{summarize, PolytopeSummary};

pub use criteria::{criterion, Claim, CriterionReport, CRITERIA};

pub const SCHEMA: &str = "polyfield/1";

#[derive(Debug, Clone)]
pub struct Config {
    pub max_enum: u128,
    pub cache: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_enum: DEFAULT_ENUM_CAP,
            cache: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub schema: String,
    pub case: String,
    pub diagram: CoxeterDiagram,
    pub prime: u64,
    pub generic: bool,
    pub order: u128,
    pub classification: Classification,
    pub cgroup: CGroupVerdict,
    pub polytope: Option<PolytopeSummary>,
    pub profile: Option<IntersectionProfile>,
    /// Element count from full enumeration, when it was run.
    pub enumerated: Option<u128>,
    pub notices: Vec<String>,
}

/// Build, classify, test the intersection property and summarize the polytope.
pub fn cmd_analyze(diagram: &CoxeterDiagram, p: u64, cfg: &Config) -> Result<AnalyzeReport> {
    let inst = Instance::new(diagram, p)?;
    let mut notices = Vec::new();
    let generic = is_generic(diagram, p);
    if !generic {
        notices.push(format!("p = {p} is not generic for this diagram"));
    }
    let group = inst.group();
    let classification = classify(&group, &inst.space);
    let cgroup = if diagram.is_string() {
        is_string_cgroup_instance(&inst, cfg.max_enum)?
    } else {
        return Err(Error::InvalidDiagram("analysis needs a string diagram".into()));
    };
    let polytope = if cgroup.is_cgroup {
        match summarize(diagram, p, cfg.max_enum) {
            Ok(s) => Some(s),
            Err(e @ Error::Capacity { .. }) => {
                notices.push(e.to_string());
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let profile = if inst.rank() >= 3 {
        match intersection_profile(diagram, p, cfg.max_enum) {
            Ok(pr) => Some(pr),
            Err(e @ Error::Capacity { .. }) => {
                notices.push(e.to_string());
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let enumerated = match &cfg.cache {
        Some(dir) if group.order() <= cfg.max_enum => {
            let cache = EnumCache::new(dir)?;
            Some(enumerate(&group, cfg.max_enum, Some(&cache))?.len() as u128)
        }
        Some(_) => {
            notices.push(format!(
                "enumeration skipped: order {} exceeds cap {}",
                group.order(),
                cfg.max_enum
            ));
            None
        }
        None => None,
    };
    Ok(AnalyzeReport {
        schema: SCHEMA.to_string(),
        case: format!("{}@{p}", diagram.schlafli()),
        diagram: diagram.clone(),
        prime: p,
        generic,
        order: group.order(),
        classification,
        cgroup,
        polytope,
        profile,
        enumerated,
        notices,
    })
}

pub const SUITES: &[(&str, &[u32])] = &[
    ("lemmas", &[1, 6, 11]),
    ("three-infinity", &[2, 3, 4, 5, 14]),
    ("euclidean", &[12]),
    ("loctor5", &[7]),
    ("loctor6", &[8, 10, 13]),
    ("covers", &[9]),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: String,
    pub criteria: Vec<CriterionReport>,
    pub passed: bool,
}

/// Run every block of a named suite; reports are ordered by criterion id.
pub fn cmd_suite(name: &str, cfg: &Config) -> Result<SuiteReport> {
    let (_, ids) = SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| {
            let names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
            Error::Parse(format!("unknown suite `{name}` (expected one of {})", names.join(", ")))
        })?;
    let criteria = ids
        .iter()
        .map(|&id| criterion(id, cfg))
        .collect::<Result<Vec<_>>>()?;
    let passed = criteria.iter().all(|c| c.passed());
    Ok(SuiteReport {
        schema: SCHEMA.to_string(),
        suite: name.to_string(),
        criteria,
        passed,
    })
}
