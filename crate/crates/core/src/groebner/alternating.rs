//! Alternating sums of compatibility rows along the orbits of a permutation
//! pairing each cluster variable with its primitive exchange partner.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{degree_vectors, groebner_cone, omega, Report};
use crate::cluster::ClusterData;
use crate::error::{Error, Result};
use crate::exact::{dot_int, primitive_int, IntVec};
use crate::polygon::PolygonModel;

/// The rotation `[i, j] -> [i+1, j+1]` on cluster variables.
pub fn rotation_permutation(model: &PolygonModel) -> Result<Vec<usize>> {
    (0..model.n_cluster()).map(|v| model.rotate(v)).collect()
}

fn orbit(t: &[usize], v: usize) -> Vec<usize> {
    let mut out = vec![v];
    let mut x = t[v];
    while x != v {
        out.push(x);
        x = t[x];
    }
    out
}

/// `sum_{i=1}^{k} (-1)^(i-1) omega_{T^i(v)}` over the `T`-orbit of `v`, which
/// must have odd size `k`.
pub fn omega_hat(data: &ClusterData, t: &[usize], v: usize) -> Result<IntVec> {
    if t.len() != data.n_cluster {
        return Err(Error::DimensionMismatch {
            expected: data.n_cluster,
            found: t.len(),
        });
    }
    let orb = orbit(t, v);
    let k = orb.len();
    if k % 2 == 0 {
        return Err(Error::WrongType(format!(
            "orbit of {} has even size {k}",
            data.labels[v]
        )));
    }
    let mut out: IntVec = vec![BigInt::from(0); data.dim()];
    for i in 1..=k {
        let w = omega(data, orb[i % k])?;
        let sign = if i % 2 == 1 { 1 } else { -1 };
        for (o, x) in out.iter_mut().zip(w) {
            *o += x * sign;
        }
    }
    Ok(out)
}

/// The cone is pointed and its rays are exactly the primitive `omega_hat`
/// vectors; moreover each `omega_hat_v` pairs to 2 with exactly one degree
/// vector and to 0 with the others.
pub fn verify_alternating_rays(data: &ClusterData, t: &[usize]) -> Result<Report> {
    let mut report = Report::default();
    let pairs: BTreeSet<(usize, usize)> = data
        .primitive_relations()
        .map(|r| (r.exchanged.0.min(r.exchanged.1), r.exchanged.0.max(r.exchanged.1)))
        .collect();
    let from_t: BTreeSet<(usize, usize)> = (0..data.n_cluster)
        .map(|x| (x.min(t[x]), x.max(t[x])))
        .collect();
    report.check(pairs == from_t, || {
        "the permutation does not pair variables along primitive relations".to_string()
    });

    let degrees = degree_vectors(data);
    let mut hats = BTreeSet::new();
    for v in 0..data.n_cluster {
        let hat = omega_hat(data, t, v)?;
        let dots: Vec<BigInt> = degrees.iter().map(|d| dot_int(&hat, &d.vector)).collect();
        let twos = dots.iter().filter(|&x| *x == BigInt::from(2)).count();
        let zeros = dots.iter().filter(|&x| *x == BigInt::from(0)).count();
        report.check(twos == 1 && zeros + 1 == dots.len(), || {
            format!("omega_hat of {} pairs to {dots:?}", data.labels[v])
        });
        hats.insert(primitive_int(&hat));
    }
    let cone = groebner_cone(data)?;
    report.check(cone.is_pointed(), || {
        format!("lineality of dimension {}", cone.lineality().len())
    });
    let rays: BTreeSet<IntVec> = cone.rays().iter().cloned().collect();
    report.check(rays == hats, || {
        format!("{} rays versus {} alternating sums", rays.len(), hats.len())
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::FrozenMode;
    use crate::polygon::{Classical, ModelSpec};

    #[test]
    fn pentagon_single_orbit() {
        let m = PolygonModel::new(ModelSpec::new(Classical::A, 2, FrozenMode::None).unwrap());
        let d = m.cluster_data().unwrap();
        let t = rotation_permutation(&m).unwrap();
        assert_eq!(orbit(&t, 0).len(), 5);
        assert!(verify_alternating_rays(&d, &t).unwrap().passed());
    }

    #[test]
    fn even_orbits_are_rejected() {
        let m = PolygonModel::new(ModelSpec::new(Classical::A, 3, FrozenMode::None).unwrap());
        let d = m.cluster_data().unwrap();
        let t = rotation_permutation(&m).unwrap();
        assert!(matches!(omega_hat(&d, &t, 0), Err(Error::WrongType(_))));
    }
}
