//! Degrees of the derivations `z^alpha d/dz_v` against the cone generated by
//! the degree vectors.

use num_bigint::BigInt;

use super::{primitive_cone, Report};
use crate::cluster::ClusterData;
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exact::IntVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivationVerdict {
    /// `z_v` divides `z^alpha`; the question does not arise.
    NotApplicable,
    Checked {
        /// Some `w` incompatible with `v` has `z_w z^alpha` outside the
        /// monomial ideal of incompatible pairs.
        nontrivial: bool,
        /// `-(alpha - e_v)` lies outside the primitive cone.
        cone_excluded: bool,
    },
}

impl DerivationVerdict {
    /// Nontriviality forces exclusion from the cone.
    pub fn consistent(self) -> bool {
        match self {
            DerivationVerdict::NotApplicable => true,
            DerivationVerdict::Checked {
                nontrivial,
                cone_excluded,
            } => !nontrivial || cone_excluded,
        }
    }
}

fn check_with(data: &ClusterData, prim: &Cone, v: usize, alpha: &[u32]) -> Result<DerivationVerdict> {
    if alpha.len() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: data.dim(),
            found: alpha.len(),
        });
    }
    if v >= data.n_cluster {
        return Err(Error::IndexOutOfRange {
            index: v,
            len: data.n_cluster,
        });
    }
    if alpha[v] > 0 {
        return Ok(DerivationVerdict::NotApplicable);
    }
    let support: Vec<usize> = (0..alpha.len()).filter(|&i| alpha[i] > 0).collect();
    let nontrivial = (0..data.n_cluster).any(|w| {
        !data.compatible(w, v) && support.iter().all(|&s| data.compatible(w, s))
    }) && support
        .iter()
        .all(|&a| support.iter().all(|&b| data.compatible(a, b)));
    let mut neg_degree: IntVec = alpha.iter().map(|&a| -BigInt::from(a)).collect();
    neg_degree[v] += 1;
    let cone_excluded = !prim.contains(&neg_degree)?;
    Ok(DerivationVerdict::Checked {
        nontrivial,
        cone_excluded,
    })
}

pub fn derivation_check(data: &ClusterData, v: usize, alpha: &[u32]) -> Result<DerivationVerdict> {
    check_with(data, &primitive_cone(data)?, v, alpha)
}

fn monomials(dim: usize, max_degree: u32) -> Vec<Vec<u32>> {
    fn rec(dim: usize, start: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(current.clone());
        if left == 0 {
            return;
        }
        for i in start..dim {
            current[i] += 1;
            rec(dim, i, left - 1, current, out);
            current[i] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(dim, 0, max_degree, &mut vec![0; dim], &mut out);
    out
}

/// Every cluster variable `v` and every monomial of degree at most
/// `max_degree`. Failures are nontrivial derivations whose negated degree
/// lies in the primitive cone.
pub fn derivation_sweep(data: &ClusterData, max_degree: u32) -> Result<Report> {
    let prim = primitive_cone(data)?;
    let mut report = Report::default();
    let mut nontrivial_count = 0usize;
    for alpha in monomials(data.dim(), max_degree) {
        for v in 0..data.n_cluster {
            let verdict = check_with(data, &prim, v, &alpha)?;
            if let DerivationVerdict::Checked { nontrivial: true, .. } = verdict {
                nontrivial_count += 1;
            }
            report.check(verdict.consistent(), || {
                format!("v = {}, alpha = {alpha:?}", data.labels[v])
            });
        }
    }
    report
        .notes
        .push(format!("{nontrivial_count} nontrivial derivations"));
    Ok(report)
}
