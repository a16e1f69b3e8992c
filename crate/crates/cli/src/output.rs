//! Text and JSON renderings.

use std::fmt::Write;

use cluster_cone::exact::{to_i64_vec, IntVec};
use cluster_cone::groebner::degree_vector;
use cluster_cone::{groebner_cone, ClusterData, VarKind};
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::config::Model;
use crate::Failure;

/// Largest rank for which text tables are printed in full.
const TABLE_RANK_CAP: usize = 8;

#[derive(Serialize)]
struct VariableEntry {
    id: usize,
    kind: String,
    diag: String,
}

#[derive(Serialize)]
struct ConeDocument {
    family: String,
    rank: usize,
    frozen_mode: String,
    variables: Vec<VariableEntry>,
    lineality: Vec<Vec<i64>>,
    rays: Vec<Vec<i64>>,
    inequalities: Vec<Vec<i64>>,
    equations: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct VariablesDocument {
    family: String,
    rank: usize,
    frozen_mode: String,
    variables: Vec<VariableEntry>,
}

#[derive(Serialize)]
struct CompatDocument {
    family: String,
    rank: usize,
    frozen_mode: String,
    labels: Vec<String>,
    compat: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct RelationEntry {
    exchanged: [usize; 2],
    terms: [Vec<u32>; 2],
    primitive_terms: Vec<usize>,
    degree_vectors: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct RelationsDocument {
    family: String,
    rank: usize,
    frozen_mode: String,
    relations: Vec<RelationEntry>,
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Computation(e.to_string()))
}

fn variable_entries(data: &ClusterData) -> Vec<VariableEntry> {
    data.labels
        .iter()
        .enumerate()
        .map(|(id, label)| VariableEntry {
            id,
            kind: match data.kind(id) {
                VarKind::Cluster => "cluster".into(),
                VarKind::Frozen => "frozen".into(),
            },
            diag: label.clone(),
        })
        .collect()
}

fn header(config: &RunConfig, model: &Model) -> String {
    format!(
        "{}{} ({} frozen)\n",
        config.family.letter(),
        config.rank,
        model.frozen()
    )
}

fn rows(vectors: &[IntVec]) -> Vec<Vec<i64>> {
    vectors.iter().map(|v| to_i64_vec(v)).collect()
}

fn monomial(data: &ClusterData, exponents: &[u32]) -> String {
    let factors: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", data.labels[i])
            } else {
                format!("x{}^{e}", data.labels[i])
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

pub fn variables(config: &RunConfig, model: &Model) -> Result<String, Failure> {
    let data = model.data()?;
    if config.format == Format::Json {
        return to_json(&VariablesDocument {
            family: config.family.letter().to_string(),
            rank: config.rank,
            frozen_mode: model.frozen().to_string(),
            variables: variable_entries(&data),
        });
    }
    let mut out = header(config, model);
    writeln!(out, "{} cluster, {} frozen", data.n_cluster, data.n_frozen).unwrap();
    if config.rank <= TABLE_RANK_CAP {
        for v in variable_entries(&data) {
            writeln!(out, "{:>4}  {:<7}  {}", v.id, v.kind, v.diag).unwrap();
        }
    }
    Ok(out)
}

pub fn compat(config: &RunConfig, model: &Model) -> Result<String, Failure> {
    let data = model.data()?;
    if config.format == Format::Json {
        return to_json(&CompatDocument {
            family: config.family.letter().to_string(),
            rank: config.rank,
            frozen_mode: model.frozen().to_string(),
            labels: data.labels[..data.n_cluster].to_vec(),
            compat: data.compat.clone(),
        });
    }
    let mut out = header(config, model);
    if config.rank > TABLE_RANK_CAP {
        writeln!(out, "{0} x {0} matrix", data.n_cluster).unwrap();
        return Ok(out);
    }
    for (label, row) in data.labels.iter().zip(&data.compat) {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        writeln!(out, "{label:>10}  {}", cells.join(" ")).unwrap();
    }
    Ok(out)
}

pub fn relations(config: &RunConfig, model: &Model, primitive_only: bool) -> Result<String, Failure> {
    let data = model.data()?;
    let mut entries = Vec::new();
    for (i, r) in data.relations.iter().enumerate() {
        if primitive_only && !r.is_primitive() {
            continue;
        }
        let degrees = if r.is_primitive() {
            degree_vector(&data, i)?
                .into_iter()
                .map(|d| to_i64_vec(&d.vector))
                .collect()
        } else {
            Vec::new()
        };
        entries.push(RelationEntry {
            exchanged: [r.exchanged.0, r.exchanged.1],
            terms: r.terms.clone(),
            primitive_terms: r.primitive_terms.clone(),
            degree_vectors: degrees,
        });
    }
    if config.format == Format::Json {
        return to_json(&RelationsDocument {
            family: config.family.letter().to_string(),
            rank: config.rank,
            frozen_mode: model.frozen().to_string(),
            relations: entries,
        });
    }
    let mut out = header(config, model);
    writeln!(out, "{} relations", entries.len()).unwrap();
    if config.rank > TABLE_RANK_CAP {
        return Ok(out);
    }
    for e in &entries {
        let [a, b] = e.exchanged;
        write!(
            out,
            "x{} * x{} = {} + {}",
            data.labels[a],
            data.labels[b],
            monomial(&data, &e.terms[0]),
            monomial(&data, &e.terms[1])
        )
        .unwrap();
        if !e.primitive_terms.is_empty() {
            write!(out, "  primitive term {:?}", e.primitive_terms).unwrap();
            for d in &e.degree_vectors {
                write!(out, "  d = {d:?}").unwrap();
            }
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn cone(config: &RunConfig, model: &Model) -> Result<String, Failure> {
    let data = model.data()?;
    let cone = groebner_cone(&data)?;
    let doc = ConeDocument {
        family: config.family.letter().to_string(),
        rank: config.rank,
        frozen_mode: model.frozen().to_string(),
        variables: variable_entries(&data),
        lineality: rows(cone.lineality()),
        rays: rows(cone.rays()),
        inequalities: rows(cone.facets()),
        equations: rows(cone.equations()),
    };
    if config.format == Format::Json {
        return to_json(&doc);
    }
    let mut out = header(config, model);
    let order: Vec<&str> = doc.variables.iter().map(|v| v.diag.as_str()).collect();
    writeln!(out, "coordinates: {}", order.join(" ")).unwrap();
    let section = |out: &mut String, name: &str, vs: &[Vec<i64>]| {
        writeln!(out, "{name} ({})", vs.len()).unwrap();
        for v in vs {
            writeln!(out, "  {v:?}").unwrap();
        }
    };
    section(&mut out, "lineality", &doc.lineality);
    section(&mut out, "rays", &doc.rays);
    section(&mut out, "inequalities", &doc.inequalities);
    if !doc.equations.is_empty() {
        section(&mut out, "equations", &doc.equations);
    }
    Ok(out)
}
