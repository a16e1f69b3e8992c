//! Verification suites behind `cluster-cone verify`.

use std::fmt::Write;

use clap::ValueEnum;
use cluster_cone::groebner::{
    derivation_sweep, interior_weight, no_frozen_cone_two_ways, rotation_permutation, statistics,
    verify_alternating_rays, verify_lineality, verify_max_equality, verify_omega_membership,
    verify_rays, Report,
};
use cluster_cone::{CartanFamily, Classical, ClusterData, Error, FrozenMode, ModelSpec, PolygonModel};
use serde::Serialize;

use crate::config::{Format, Model, RunConfig, UsageError};
use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Compdegree,
    Equality,
    Interior,
    /// Rays of the cone without frozen variables as alternating sums.
    #[value(name = "result2")]
    AlternatingRays,
    Lineality,
    Rays,
    Nofrozen,
    Derivations,
    Crossmodel,
    All,
}

const SUITES: [Check; 9] = [
    Check::Compdegree,
    Check::Equality,
    Check::Interior,
    Check::AlternatingRays,
    Check::Lineality,
    Check::Rays,
    Check::Nofrozen,
    Check::Derivations,
    Check::Crossmodel,
];

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Compdegree => "compdegree",
            Check::Equality => "equality",
            Check::Interior => "interior",
            Check::AlternatingRays => "result2",
            Check::Lineality => "lineality",
            Check::Rays => "rays",
            Check::Nofrozen => "nofrozen",
            Check::Derivations => "derivations",
            Check::Crossmodel => "crossmodel",
            Check::All => "all",
        }
    }
}

enum Outcome {
    Ran(Report),
    Skipped(String),
}

#[derive(Serialize)]
struct CheckEntry {
    name: &'static str,
    status: &'static str,
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct VerifyDocument {
    family: String,
    rank: usize,
    frozen_mode: String,
    passed: bool,
    checks: Vec<CheckEntry>,
}

pub struct VerifyOutcome {
    pub text: String,
    pub passed: bool,
}

fn single(ok: bool, witness: String) -> Report {
    Report {
        checked: 1,
        failures: if ok { Vec::new() } else { vec![witness] },
        notes: Vec::new(),
    }
}

fn polygon_spec(config: &RunConfig, model: &Model) -> Option<ModelSpec> {
    match model {
        Model::Polygon(m) => Some(m.spec()),
        Model::Root(_) => config.classical().and_then(|f| {
            ModelSpec::new(f, config.rank, FrozenMode::None).ok()
        }),
    }
}

fn alternating_rays(model: &Model, data: &ClusterData) -> Result<Outcome, Failure> {
    let t = match model {
        Model::Polygon(m) => {
            if m.spec().frozen() != FrozenMode::None {
                return Ok(Outcome::Skipped("needs a model without frozen variables".into()));
            }
            rotation_permutation(m)?
        }
        Model::Root(m) => m.tau_permutation().to_vec(),
    };
    match verify_alternating_rays(data, &t) {
        Ok(report) => Ok(Outcome::Ran(report)),
        Err(Error::WrongType(msg)) => Ok(Outcome::Skipped(msg)),
        Err(e) => Err(e.into()),
    }
}

fn crossmodel(config: &RunConfig) -> Result<Outcome, Failure> {
    let Some(family) = config.classical() else {
        return Ok(Outcome::Skipped("no polygon model for this family".into()));
    };
    let spec = ModelSpec::new(family, config.rank, FrozenMode::None)
        .map_err(|e| UsageError(e.to_string()))?;
    let poly = statistics(&PolygonModel::new(spec).cluster_data()?)?;
    let root = statistics(&config.root_model()?.cluster_data()?)?;
    let n = config.rank;
    let expected = match family {
        Classical::A => n * (n + 3) / 2,
        Classical::B | Classical::C => n * (n + 1),
        Classical::D => n * n,
    };
    let mut report = single(poly == root, format!("polygon {poly:?} versus root {root:?}"));
    report.checked += 1;
    if poly.variables != expected {
        report
            .failures
            .push(format!("{} cluster variables, expected {expected}", poly.variables));
    }
    report.notes.push(format!("{poly:?}"));
    Ok(Outcome::Ran(report))
}

fn run_one(
    check: Check,
    config: &RunConfig,
    model: &Model,
    data: &ClusterData,
    max_degree: u32,
) -> Result<Outcome, Failure> {
    let spec = polygon_spec(config, model);
    let polygon_only = || Outcome::Skipped("needs a polygon model".into());
    Ok(match check {
        Check::Compdegree => Outcome::Ran(verify_omega_membership(data)),
        Check::Equality => Outcome::Ran(verify_max_equality(data)),
        Check::Interior => {
            let iw = interior_weight(data)?;
            let mut report = single(
                iw.certified(),
                format!(
                    "minimum dot {:?}, relative interior {}",
                    iw.min_dot, iw.relative_interior
                ),
            );
            report.notes.push(format!(
                "weight {:?}",
                cluster_cone::exact::to_i64_vec(&iw.weight)
            ));
            Outcome::Ran(report)
        }
        Check::AlternatingRays => alternating_rays(model, data)?,
        Check::Lineality => match (model, spec) {
            (Model::Polygon(_), Some(s)) => Outcome::Ran(verify_lineality(s)?),
            _ => polygon_only(),
        },
        Check::Rays => match (model, spec) {
            (Model::Polygon(_), Some(s)) => Outcome::Ran(verify_rays(s)?),
            _ => polygon_only(),
        },
        Check::Nofrozen => match spec {
            Some(s) => {
                let routes = no_frozen_cone_two_ways(s.family(), s.rank())?;
                let bare = s.with_frozen(FrozenMode::None);
                let mut report = single(routes.equal, "the two constructions differ".into());
                for part in [verify_lineality(bare)?, verify_rays(bare)?] {
                    report.checked += part.checked;
                    report.failures.extend(part.failures);
                    report.notes.extend(part.notes);
                }
                Outcome::Ran(report)
            }
            None => polygon_only(),
        },
        Check::Derivations => Outcome::Ran(derivation_sweep(data, max_degree)?),
        Check::Crossmodel => crossmodel(config)?,
        Check::All => unreachable!("expanded by the caller"),
    })
}

pub fn run(config: &RunConfig, check: Check, max_degree: u32) -> Result<VerifyOutcome, Failure> {
    if config.family == CartanFamily::E && config.rank >= 7 && !config.long {
        return Err(UsageError("E7 and E8 runs need --long".into()).into());
    }
    let model = config.build()?;
    let data = model.data()?;
    let checks: Vec<Check> = if check == Check::All {
        SUITES.to_vec()
    } else {
        vec![check]
    };
    let mut entries = Vec::new();
    for c in checks {
        let entry = match run_one(c, config, &model, &data, max_degree)? {
            Outcome::Ran(report) => CheckEntry {
                name: c.name(),
                status: if report.passed() { "pass" } else { "fail" },
                checked: report.checked,
                failures: report.failures,
                notes: report.notes,
            },
            Outcome::Skipped(reason) => {
                if check != Check::All {
                    return Err(UsageError(format!("{} does not apply: {reason}", c.name())).into());
                }
                CheckEntry {
                    name: c.name(),
                    status: "skip",
                    checked: 0,
                    failures: Vec::new(),
                    notes: vec![reason],
                }
            }
        };
        entries.push(entry);
    }
    let passed = entries.iter().all(|e| e.status != "fail");
    let text = if config.format == Format::Json {
        let doc = VerifyDocument {
            family: config.family.letter().to_string(),
            rank: config.rank,
            frozen_mode: model.frozen().to_string(),
            passed,
            checks: entries,
        };
        serde_json::to_string_pretty(&doc).map_err(|e| Failure::Computation(e.to_string()))? + "\n"
    } else {
        let mut out = String::new();
        for e in &entries {
            match e.status {
                "pass" => writeln!(out, "PASS {} ({} checks)", e.name, e.checked),
                "skip" => writeln!(out, "SKIP {}: {}", e.name, e.notes.join("; ")),
                _ => writeln!(
                    out,
                    "FAIL {} ({} of {} checks): {}",
                    e.name,
                    e.failures.len(),
                    e.checked,
                    e.failures[0]
                ),
            }
            .unwrap();
            if e.status != "skip" {
                for note in &e.notes {
                    writeln!(out, "  {note}").unwrap();
                }
            }
        }
        out
    };
    Ok(VerifyOutcome { text, passed })
}
