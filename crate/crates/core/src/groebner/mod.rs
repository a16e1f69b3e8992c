//! Degree vectors of primitive exchange relations, the cone they generate and
//! its dual, the Gröbner cone. The submodules verify explicit descriptions of
//! that cone.

mod alternating;
mod claims;
mod derivation;
mod families;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cluster::ClusterData;
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exact::{dot_int, int_kernel_basis, int_rank, IntVec};

pub use alternating::{omega_hat, rotation_permutation, verify_alternating_rays};
pub use claims::{
    claimed_lineality, claimed_rays, no_frozen_cone_two_ways, verify_lineality, verify_rays,
    Claim, NoFrozenRoutes,
};
pub use derivation::{derivation_check, derivation_sweep, DerivationVerdict};
pub use families::Families;

/// `deg(x x') - deg(y)` for a primitive relation with primitive term `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVector {
    /// Index of the relation in [`ClusterData::relations`].
    pub relation: usize,
    /// Which of the two right-hand terms is the primitive one.
    pub term: usize,
    pub vector: IntVec,
}

/// Outcome of a verification sweep. `failures` holds one line per violated
/// instance, naming the witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(witness());
        }
    }
}

/// Degree vectors of the relation at `index`, one per primitive term.
pub fn degree_vector(data: &ClusterData, index: usize) -> Result<Vec<DegreeVector>> {
    let r = data.relations.get(index).ok_or(Error::IndexOutOfRange {
        index,
        len: data.relations.len(),
    })?;
    if !r.is_primitive() {
        return Err(Error::NotPrimitive(index));
    }
    let lhs = r.exchanged_monomial(data.dim());
    Ok(r.primitive_terms
        .iter()
        .map(|&t| DegreeVector {
            relation: index,
            term: t,
            vector: lhs
                .iter()
                .zip(&r.terms[t])
                .map(|(&a, &b)| BigInt::from(a) - BigInt::from(b))
                .collect(),
        })
        .collect())
}

pub fn degree_vectors(data: &ClusterData) -> Vec<DegreeVector> {
    (0..data.relations.len())
        .filter(|&i| data.relations[i].is_primitive())
        .flat_map(|i| degree_vector(data, i).expect("primitive by filter"))
        .collect()
}

fn plain_degrees(data: &ClusterData) -> Vec<IntVec> {
    degree_vectors(data).into_iter().map(|d| d.vector).collect()
}

/// The cone generated by all degree vectors.
pub fn primitive_cone(data: &ClusterData) -> Result<Cone> {
    Cone::from_generators(data.dim(), &plain_degrees(data), &[])
}

/// `{w : w.d >= 0 for every degree vector d}`, the dual of [`primitive_cone`].
pub fn groebner_cone(data: &ClusterData) -> Result<Cone> {
    Cone::from_inequalities(data.dim(), &plain_degrees(data), &[])
}

/// Kernel of the matrix whose rows are the degree vectors.
pub fn degree_kernel(data: &ClusterData) -> Vec<IntVec> {
    int_kernel_basis(data.dim(), &plain_degrees(data))
}

/// Row of compatibility degrees `(v || y)` over all variables, zero at
/// frozen ones.
pub fn omega(data: &ClusterData, v: usize) -> Result<IntVec> {
    if v >= data.n_cluster {
        return Err(Error::IndexOutOfRange {
            index: v,
            len: data.n_cluster,
        });
    }
    Ok((0..data.dim())
        .map(|y| BigInt::from(data.degree(v, y)))
        .collect())
}

fn exponent_vec(e: &[u32]) -> IntVec {
    e.iter().map(|&x| BigInt::from(x)).collect()
}

/// For every relation `x x' = m1 + m2` and every cluster variable `v` other
/// than `x, x'`: `omega_v . deg(x x') = max(omega_v . m1, omega_v . m2)`.
pub fn verify_max_equality(data: &ClusterData) -> Report {
    let mut report = Report::default();
    let dim = data.dim();
    let omegas: Vec<IntVec> = (0..data.n_cluster)
        .map(|v| omega(data, v).expect("cluster index"))
        .collect();
    for (i, r) in data.relations.iter().enumerate() {
        let lhs = exponent_vec(&r.exchanged_monomial(dim));
        let t0 = exponent_vec(&r.terms[0]);
        let t1 = exponent_vec(&r.terms[1]);
        for (v, w) in omegas.iter().enumerate() {
            if r.involves(v) {
                continue;
            }
            let left = dot_int(w, &lhs);
            let right = dot_int(w, &t0).max(dot_int(w, &t1));
            report.check(left == right, || {
                format!(
                    "relation {i} ({} * {}), v = {}: {left} != max {right}",
                    data.labels[r.exchanged.0], data.labels[r.exchanged.1], data.labels[v]
                )
            });
        }
    }
    report
}

/// `omega_v . d >= 0` for every cluster variable `v` and degree vector `d`.
pub fn verify_omega_membership(data: &ClusterData) -> Report {
    let mut report = Report::default();
    let degrees = degree_vectors(data);
    for v in 0..data.n_cluster {
        let w = omega(data, v).expect("cluster index");
        for d in &degrees {
            let dot = dot_int(&w, &d.vector);
            report.check(!dot.is_negative(), || {
                format!("v = {}, relation {}: dot {dot}", data.labels[v], d.relation)
            });
        }
    }
    report
}

/// The sum of all `omega_v` together with the evidence that it is interior.
#[derive(Clone, Debug)]
pub struct InteriorWeight {
    pub weight: IntVec,
    /// Smallest dot product with a degree vector, `None` if there are none.
    pub min_dot: Option<BigInt>,
    pub relative_interior: bool,
}

impl InteriorWeight {
    pub fn certified(&self) -> bool {
        self.relative_interior && self.min_dot.as_ref().is_none_or(|m| *m >= BigInt::from(2))
    }
}

pub fn interior_weight(data: &ClusterData) -> Result<InteriorWeight> {
    let mut weight: IntVec = vec![BigInt::from(0); data.dim()];
    for v in 0..data.n_cluster {
        for (acc, x) in weight.iter_mut().zip(omega(data, v)?) {
            *acc += x;
        }
    }
    let min_dot = degree_vectors(data)
        .iter()
        .map(|d| dot_int(&weight, &d.vector))
        .min();
    let relative_interior = groebner_cone(data)?.contains_relative_interior(&weight)?;
    Ok(InteriorWeight {
        weight,
        min_dot,
        relative_interior,
    })
}

/// Extended exchange matrix of the seed with cluster `cluster`: one column
/// per cluster variable `x_k`, holding the difference of the exponent
/// vectors of the relation that exchanges `x_k` out of the cluster,
/// restricted to the cluster and frozen rows. Columns are determined up to
/// sign.
pub fn extended_exchange_matrix(data: &ClusterData, cluster: &[usize]) -> Result<Vec<IntVec>> {
    let rows: Vec<usize> = cluster
        .iter()
        .copied()
        .chain(data.n_cluster..data.dim())
        .collect();
    let mut columns = Vec::with_capacity(cluster.len());
    for &k in cluster {
        let rel = data
            .relations
            .iter()
            .find(|r| {
                let other = if r.exchanged.0 == k {
                    r.exchanged.1
                } else if r.exchanged.1 == k {
                    r.exchanged.0
                } else {
                    return false;
                };
                cluster
                    .iter()
                    .all(|&c| c == k || data.compatible(c, other))
            })
            .ok_or(Error::ParameterOutOfRange(format!(
                "no exchange for {} in the given cluster",
                data.labels[k]
            )))?;
        let column: IntVec = rows
            .iter()
            .map(|&i| BigInt::from(rel.terms[0][i]) - BigInt::from(rel.terms[1][i]))
            .collect();
        columns.push(column);
    }
    Ok(columns)
}

pub fn exchange_matrix_rank(data: &ClusterData, cluster: &[usize]) -> Result<usize> {
    Ok(int_rank(&extended_exchange_matrix(data, cluster)?))
}

/// Model-independent counts used to compare two constructions of the same
/// cluster algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statistics {
    pub variables: usize,
    pub relations: usize,
    pub primitive: usize,
    pub lineality_dim: usize,
    pub rays: usize,
}

pub fn statistics(data: &ClusterData) -> Result<Statistics> {
    let cone = groebner_cone(data)?;
    Ok(Statistics {
        variables: data.n_cluster,
        relations: data.relations.len(),
        primitive: data.primitive_relations().count(),
        lineality_dim: cone.lineality().len(),
        rays: cone.rays().len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::FrozenMode;
    use crate::exact::int_vec;
    use crate::polygon::{Classical, Color, ModelSpec, PolygonModel};

    fn polygon(family: Classical, rank: usize, frozen: FrozenMode) -> PolygonModel {
        PolygonModel::new(ModelSpec::new(family, rank, frozen).unwrap())
    }

    fn data(family: Classical, rank: usize, frozen: FrozenMode) -> ClusterData {
        polygon(family, rank, frozen).cluster_data().unwrap()
    }

    #[test]
    fn a1_degree_vectors() {
        let d = data(Classical::A, 1, FrozenMode::Special);
        let vs: Vec<IntVec> = degree_vectors(&d).into_iter().map(|d| d.vector).collect();
        assert_eq!(
            vs,
            vec![int_vec(&[1, 1, -1, 0, -1, 0]), int_vec(&[1, 1, 0, -1, 0, -1])]
        );
    }

    #[test]
    fn non_primitive_relation_is_rejected() {
        let d = data(Classical::A, 3, FrozenMode::Special);
        let i = d.relations.iter().position(|r| !r.is_primitive()).unwrap();
        assert_eq!(degree_vector(&d, i), Err(Error::NotPrimitive(i)));
    }

    #[test]
    fn pentagon_degree_has_three_entries() {
        let d = data(Classical::A, 2, FrozenMode::None);
        for dv in degree_vectors(&d) {
            let support: Vec<i64> = dv
                .vector
                .iter()
                .filter(|x| x.sign() != num_bigint::Sign::NoSign)
                .map(|x| i64::try_from(x).unwrap())
                .collect();
            let mut sorted = support.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![-1, 1, 1]);
        }
    }

    #[test]
    fn frozen_coordinates_of_degrees_are_non_positive() {
        for (f, n) in [(Classical::A, 4), (Classical::B, 3), (Classical::C, 3), (Classical::D, 4)] {
            let d = data(f, n, FrozenMode::Special);
            for dv in degree_vectors(&d) {
                assert!(dv.vector[d.n_cluster..].iter().all(|x| !x.is_positive()));
                let (x, y) = d.relations[dv.relation].exchanged;
                assert_eq!(dv.vector[x], BigInt::from(1));
                assert_eq!(dv.vector[y], BigInt::from(1));
            }
        }
    }

    #[test]
    fn a1_omega_and_interior_weight() {
        let d = data(Classical::A, 1, FrozenMode::Special);
        assert_eq!(omega(&d, 0).unwrap(), int_vec(&[0, 1, 0, 0, 0, 0]));
        let iw = interior_weight(&d).unwrap();
        assert_eq!(iw.weight, int_vec(&[1, 1, 0, 0, 0, 0]));
        assert_eq!(iw.min_dot, Some(BigInt::from(2)));
        assert!(iw.certified());
    }

    #[test]
    fn groebner_cone_is_dual_of_primitive_cone() {
        for (f, n) in [(Classical::A, 3), (Classical::B, 2), (Classical::D, 4)] {
            let d = data(f, n, FrozenMode::Special);
            assert_eq!(groebner_cone(&d).unwrap(), primitive_cone(&d).unwrap().dual());
        }
    }

    #[test]
    fn pentagon_equality_by_hand() {
        // v = [1,4] against the relation exchanging [2,5] and [1,3]: the
        // quadrilateral 1-2-3-5 has sides [1,2],[3,5] and [2,3],[1,5].
        let m = polygon(Classical::A, 2, FrozenMode::Special);
        let d = m.cluster_data().unwrap();
        let idx = |a, b| m.lookup(a, b, Color::Plain).unwrap();
        let (x, y, v) = (idx(2, 5), idx(1, 3), idx(1, 4));
        let r = d
            .relations
            .iter()
            .find(|r| r.exchanged == (x.min(y), x.max(y)))
            .unwrap();
        let w = omega(&d, v).unwrap();
        // [1,4] crosses [2,5] and [3,5] only.
        let lhs = dot_int(&w, &exponent_vec(&r.exchanged_monomial(d.dim())));
        assert_eq!(lhs, BigInt::from(1));
        let dots: Vec<BigInt> = r.terms.iter().map(|t| dot_int(&w, &exponent_vec(t))).collect();
        assert_eq!(dots.iter().max().unwrap(), &lhs);
        assert!(verify_max_equality(&d).passed());
    }

    #[test]
    fn exchange_matrix_ranks() {
        for (f, n, expected) in [
            (Classical::A, 3, 3),
            (Classical::A, 4, 4),
            (Classical::D, 4, 3),
            (Classical::D, 5, 4),
        ] {
            let d = data(f, n, FrozenMode::Special);
            for cluster in d.clusters().iter().take(5) {
                assert_eq!(exchange_matrix_rank(&d, cluster).unwrap(), expected, "{f:?}{n}");
            }
        }
    }
}
