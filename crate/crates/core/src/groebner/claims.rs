//! Explicit lineality bases and ray generators for the classical polygon
//! models, and their comparison with the cone computed by double
//! description.
//!
//! Without frozen variables the vectors are built in the coordinates of the
//! model with frozen edges, required to vanish on the frozen coordinates,
//! and then restricted to the cluster coordinates.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::families::Families;
use super::{degree_vectors, groebner_cone, Report};
use crate::cluster::FrozenMode;
use crate::cone::{cones_equal, Cone};
use crate::error::{Error, Result};
use crate::exact::{dot_int, int_kernel_basis, int_rank, primitive_rat, sign_normalized, IntVec, RatVec};
use crate::polygon::{Classical, Diagonal, ModelSpec, PolygonModel};

/// Which explicit description applies to a polygon model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// A, B, C with frozen edges: vertex sums and `v(l)`.
    FrozenAbc,
    /// D with frozen edges: adds `u_diam` and the `w(j,k)`.
    FrozenD,
    /// A, B, C of even rank without frozen variables: pointed and simplicial.
    EvenAbc,
    /// A, B, C of odd rank without frozen variables.
    OddAbc,
    /// D of odd rank without frozen variables.
    OddD,
    /// D of even rank without frozen variables. Generators may be redundant.
    EvenD,
}

impl Claim {
    pub fn for_spec(spec: ModelSpec) -> Result<Claim> {
        let d = spec.family() == Classical::D;
        let even = spec.rank() % 2 == 0;
        Ok(match (spec.frozen(), d, even) {
            (FrozenMode::Special, false, _) => Claim::FrozenAbc,
            (FrozenMode::Special, true, _) => Claim::FrozenD,
            (FrozenMode::None, false, true) => Claim::EvenAbc,
            (FrozenMode::None, false, false) => {
                if spec.family() != Classical::A && spec.rank() < 3 {
                    return Err(Error::WrongType(spec.to_string()));
                }
                Claim::OddAbc
            }
            (FrozenMode::None, true, false) => Claim::OddD,
            (FrozenMode::None, true, true) => Claim::EvenD,
        })
    }

    fn frozen(self) -> bool {
        matches!(self, Claim::FrozenAbc | Claim::FrozenD)
    }
}

/// A claimed generator: `full` in the coordinates with frozen edges, `vector`
/// in the coordinates of the model it was claimed for.
#[derive(Clone, Debug)]
pub struct ClaimedVector {
    pub label: String,
    pub full: RatVec,
    pub vector: RatVec,
}

struct Builder {
    claim: Claim,
    framed: PolygonModel,
    n_cluster: usize,
}

impl Builder {
    fn new(spec: ModelSpec) -> Result<Builder> {
        let claim = Claim::for_spec(spec)?;
        let framed = PolygonModel::new(spec.with_frozen(FrozenMode::Special));
        let n_cluster = framed.n_cluster();
        Ok(Builder {
            claim,
            framed,
            n_cluster,
        })
    }

    fn families(&self) -> Families<'_> {
        Families::new(&self.framed).expect("built with frozen edges")
    }

    fn wrap(&self, label: String, full: RatVec) -> ClaimedVector {
        let vector = if self.claim.frozen() {
            full.clone()
        } else {
            full[..self.n_cluster].to_vec()
        };
        ClaimedVector {
            label,
            full,
            vector,
        }
    }

    fn in_subspace(&self, v: &RatVec) -> bool {
        v[self.n_cluster..].iter().all(Zero::is_zero)
    }

    fn lineality(&self) -> Result<Vec<ClaimedVector>> {
        let f = self.families();
        let spec = self.framed.spec();
        let n = spec.rank() as i64;
        let mut out = Vec::new();
        match self.claim {
            Claim::FrozenAbc | Claim::FrozenD => {
                let top = match spec.family() {
                    Classical::A => n + 3,
                    Classical::B | Classical::C => n + 1,
                    Classical::D => n,
                };
                for i in 1..=top {
                    out.push(self.wrap(format!("E_{i}"), f.e_vertex(i)?));
                }
                if self.claim == Claim::FrozenD {
                    out.push(self.wrap("u_diam".into(), f.u_diam()?));
                }
            }
            Claim::EvenAbc => {}
            Claim::OddAbc => out.push(self.wrap("alt(E)".into(), f.e_alternating()?)),
            Claim::OddD => out.push(self.wrap("u_diam".into(), f.u_diam()?)),
            Claim::EvenD => {
                out.push(self.wrap("alt(E)".into(), f.e_alternating()?));
                out.push(self.wrap("u_diam".into(), f.u_diam()?));
            }
        }
        Ok(out)
    }

    /// `base + H` along the segment joining `p` and `q`. The minor arc is used
    /// when there is one; for a segment of half the perimeter, the
    /// orientation keeping the sum on the frozen-free subspace wins, ties
    /// going to the smaller starting vertex.
    fn with_h(&self, base: RatVec, p: u32, q: u32) -> Result<(RatVec, u32)> {
        let f = self.families();
        let seg = Diagonal::new(p, q);
        let candidates: Vec<(u32, u32)> = match f.minor_arc(&seg) {
            Ok(arc) => vec![arc],
            Err(_) => {
                let half = self.framed.size() / 2;
                let mut both = vec![(seg.lo, half), (seg.hi, half)];
                both.sort_unstable();
                both
            }
        };
        let mut built = Vec::new();
        for (start, len) in candidates {
            let mut sum = base.clone();
            for (s, h) in sum.iter_mut().zip(f.h_oriented(start, len)?) {
                *s += h;
            }
            built.push((sum, start));
        }
        let pick = built
            .iter()
            .position(|(s, _)| self.in_subspace(s))
            .unwrap_or(0);
        Ok(built.swap_remove(pick))
    }

    fn rays(&self) -> Result<Vec<ClaimedVector>> {
        let f = self.families();
        let spec = self.framed.spec();
        let n = spec.rank() as u32;
        let len = |l: &Diagonal| self.framed.length(l);
        let non_maximal: Vec<Diagonal> = f
            .segments()
            .into_iter()
            .filter(|l| f.is_non_maximal(l))
            .collect();
        let odd: Vec<Diagonal> = non_maximal.iter().copied().filter(|l| len(l) % 2 == 1).collect();
        let mut out = Vec::new();

        let add = |v: RatVec, a: RatVec| -> RatVec { v.iter().zip(&a).map(|(x, y)| x + y).collect() };
        let odd_pairs = |out: &mut Vec<ClaimedVector>| -> Result<()> {
            for (i, l) in odd.iter().enumerate() {
                for m in &odd[i + 1..] {
                    let (p, q) = (f.delta_plus(l)?, f.delta_plus(m)?);
                    if (p + q) % 2 == 0 {
                        continue;
                    }
                    let base = add(f.vtilde_of(l)?, f.vtilde_of(m)?);
                    let (full, start) = self.with_h(base, p, q)?;
                    out.push(self.wrap(format!("vt({l})+vt({m})+H@{start}"), full));
                }
            }
            Ok(())
        };

        match self.claim {
            Claim::FrozenAbc => {
                for l in &non_maximal {
                    out.push(self.wrap(format!("v({l})"), f.v_of(l)?));
                }
            }
            Claim::FrozenD => {
                for l in non_maximal.iter().filter(|l| len(l) + 2 <= n) {
                    out.push(self.wrap(format!("v({l})"), f.v_of(l)?));
                }
                for j in 1..=n as i64 {
                    for k in 0..n as i64 {
                        out.push(self.wrap(format!("w({j},{k})"), f.w_jk(j, k)?));
                    }
                }
            }
            Claim::EvenAbc => {
                for l in &non_maximal {
                    out.push(self.wrap(format!("vt({l})"), f.vtilde_of(l)?));
                }
            }
            Claim::OddAbc => {
                for l in non_maximal.iter().filter(|l| len(l) % 2 == 0) {
                    out.push(self.wrap(format!("vt({l})"), f.vtilde_of(l)?));
                }
                odd_pairs(&mut out)?;
            }
            Claim::OddD => {
                for l in non_maximal.iter().filter(|l| len(l) + 2 <= n) {
                    out.push(self.wrap(format!("vt({l})"), f.vtilde_of(l)?));
                }
                for j in 1..=n as i64 {
                    for k in 0..n as i64 {
                        out.push(self.wrap(format!("wt({j},{k})"), f.wtilde_jk(j, k)?));
                    }
                }
            }
            Claim::EvenD => {
                for l in non_maximal
                    .iter()
                    .filter(|l| len(l) % 2 == 0 && len(l) + 2 <= n)
                {
                    out.push(self.wrap(format!("vt({l})"), f.vtilde_of(l)?));
                }
                for j in 1..=n as i64 {
                    for k in (0..n as i64).step_by(2) {
                        out.push(self.wrap(format!("wt({j},{k})"), f.wtilde_jk(j, k)?));
                    }
                }
                odd_pairs(&mut out)?;
                for j in 1..=n as i64 {
                    for k in (1..n as i64).step_by(2) {
                        let corner = self.framed.vertex(j + k);
                        for l in odd.iter().filter(|l| {
                            (j + f.delta_plus(l).expect("non-maximal") as i64) % 2 == 0
                        }) {
                            let base = add(f.wtilde_jk(j, k)?, f.vtilde_of(l)?);
                            let (full, start) = self.with_h(base, corner, f.delta_plus(l)?)?;
                            out.push(self.wrap(format!("wt({j},{k})+vt({l})+H@{start}"), full));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Claimed basis of the lineality space of the Gröbner cone of `spec`.
pub fn claimed_lineality(spec: ModelSpec) -> Result<Vec<ClaimedVector>> {
    Builder::new(spec)?.lineality()
}

/// Claimed generators of the rays of the Gröbner cone of `spec`, modulo
/// lineality.
pub fn claimed_rays(spec: ModelSpec) -> Result<Vec<ClaimedVector>> {
    Builder::new(spec)?.rays()
}

fn check_subspace(report: &mut Report, builder: &Builder, claimed: &[ClaimedVector]) {
    if builder.claim.frozen() {
        return;
    }
    for c in claimed {
        report.check(builder.in_subspace(&c.full), || {
            format!("{} has nonzero frozen coordinates", c.label)
        });
    }
}

/// The claimed lineality vectors form a basis of the kernel of the degree
/// matrix.
pub fn verify_lineality(spec: ModelSpec) -> Result<Report> {
    let builder = Builder::new(spec)?;
    let data = PolygonModel::new(spec).cluster_data()?;
    let dim = data.dim();
    let claimed = builder.lineality()?;
    let mut report = Report::default();
    check_subspace(&mut report, &builder, &claimed);

    let basis: Vec<IntVec> = claimed.iter().map(|c| primitive_rat(&c.vector)).collect();
    let degrees = degree_vectors(&data);
    for (c, b) in claimed.iter().zip(&basis) {
        for d in &degrees {
            let dot = dot_int(b, &d.vector);
            report.check(dot.is_zero(), || {
                format!("{} . d(relation {}) = {dot}", c.label, d.relation)
            });
        }
    }
    let kernel = int_kernel_basis(dim, &degrees.iter().map(|d| d.vector.clone()).collect::<Vec<_>>());
    let rank = int_rank(&basis);
    report.check(rank == basis.len(), || {
        format!("claimed vectors are dependent: rank {rank} of {}", basis.len())
    });
    let mut joint = basis.clone();
    joint.extend(kernel.iter().cloned());
    let joint_rank = int_rank(&joint);
    report.check(joint_rank == rank && rank == kernel.len(), || {
        format!(
            "span mismatch: claimed rank {rank}, kernel dim {}, joint rank {joint_rank}",
            kernel.len()
        )
    });
    report
        .notes
        .push(format!("lineality dimension {}", kernel.len()));
    Ok(report)
}

/// Every claimed ray generator lies in the cone, and modulo lineality the
/// claimed set coincides with the extreme rays found by double description.
/// For [`Claim::EvenD`] claimed vectors that are not extreme are recorded as
/// notes instead of failures.
pub fn verify_rays(spec: ModelSpec) -> Result<Report> {
    let builder = Builder::new(spec)?;
    let data = PolygonModel::new(spec).cluster_data()?;
    let cone = groebner_cone(&data)?;
    let claimed = builder.rays()?;
    let mut report = Report::default();
    check_subspace(&mut report, &builder, &claimed);

    let mut canonical: BTreeMap<IntVec, &str> = BTreeMap::new();
    let mut redundant = Vec::new();
    for c in &claimed {
        let v = primitive_rat(&c.vector);
        report.check(cone.contains(&v)?, || format!("{} is not in the cone", c.label));
        canonical.entry(cone.modulo_lineality(&v)?).or_insert(&c.label);
    }
    for r in cone.rays() {
        report.check(canonical.contains_key(r), || {
            format!("ray {:?} is not claimed", crate::exact::to_i64_vec(r))
        });
    }
    for (v, label) in &canonical {
        if cone.rays().binary_search(v).is_err() {
            redundant.push(*label);
        }
    }
    if builder.claim == Claim::EvenD {
        if !redundant.is_empty() {
            report.notes.push(format!(
                "{} claimed generators are not extreme: {}",
                redundant.len(),
                redundant.join(", ")
            ));
        }
    } else {
        for label in redundant {
            report.check(false, || format!("{label} is not an extreme ray"));
        }
    }
    if builder.claim == Claim::EvenAbc {
        report.check(cone.is_pointed() && cone.rays().len() == cone.dim(), || {
            format!(
                "expected a pointed simplicial cone with {} rays, found {} rays and lineality {}",
                cone.dim(),
                cone.rays().len(),
                cone.lineality().len()
            )
        });
    }
    report.notes.push(format!(
        "{} rays, {} distinct claimed directions",
        cone.rays().len(),
        canonical.len()
    ));
    Ok(report)
}

/// The cone without frozen variables computed twice: by cutting the cone
/// with frozen edges down to the subspace where frozen coordinates vanish and
/// projecting, and directly from its own degree vectors.
#[derive(Clone, Debug)]
pub struct NoFrozenRoutes {
    pub via_subspace: Cone,
    pub direct: Cone,
    pub equal: bool,
}

pub fn no_frozen_cone_two_ways(family: Classical, rank: usize) -> Result<NoFrozenRoutes> {
    let framed = PolygonModel::new(ModelSpec::new(family, rank, FrozenMode::Special)?);
    let big = groebner_cone(&framed.cluster_data()?)?;
    let dim = framed.dim();
    let n_cluster = framed.n_cluster();
    let vanish: Vec<IntVec> = (n_cluster..dim)
        .map(|i| {
            let mut e = vec![num_bigint::BigInt::zero(); dim];
            e[i] = 1.into();
            sign_normalized(&e)
        })
        .collect();
    let indices: Vec<usize> = (0..n_cluster).collect();
    let via_subspace = big.intersect_with_subspace(&vanish)?.project_coordinates(&indices)?;
    let bare = PolygonModel::new(ModelSpec::new(family, rank, FrozenMode::None)?);
    let direct = groebner_cone(&bare.cluster_data()?)?;
    let equal = via_subspace == direct && cones_equal(&via_subspace, &direct)?;
    Ok(NoFrozenRoutes {
        via_subspace,
        direct,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_vec;

    fn spec(f: Classical, n: usize, frozen: FrozenMode) -> ModelSpec {
        ModelSpec::new(f, n, frozen).unwrap()
    }

    #[test]
    fn claim_selection() {
        assert_eq!(Claim::for_spec(spec(Classical::A, 3, FrozenMode::Special)).unwrap(), Claim::FrozenAbc);
        assert_eq!(Claim::for_spec(spec(Classical::D, 4, FrozenMode::None)).unwrap(), Claim::EvenD);
        assert_eq!(Claim::for_spec(spec(Classical::D, 5, FrozenMode::None)).unwrap(), Claim::OddD);
        assert_eq!(Claim::for_spec(spec(Classical::B, 2, FrozenMode::None)).unwrap(), Claim::EvenAbc);
    }

    #[test]
    fn a1_rays_are_negative_units() {
        let rays: Vec<IntVec> = claimed_rays(spec(Classical::A, 1, FrozenMode::Special))
            .unwrap()
            .iter()
            .map(|c| primitive_rat(&c.vector))
            .collect();
        // Every edge is non-maximal in the square; v(edge) is a negative unit.
        assert!(rays.contains(&int_vec(&[0, 0, -1, 0, 0, 0])));
        assert!(rays.contains(&int_vec(&[0, 0, 0, -1, 0, 0])));
        assert!(verify_rays(spec(Classical::A, 1, FrozenMode::Special)).unwrap().passed());
    }

    #[test]
    fn small_claims_hold() {
        for s in [
            spec(Classical::A, 2, FrozenMode::Special),
            spec(Classical::A, 2, FrozenMode::None),
            spec(Classical::A, 3, FrozenMode::None),
            spec(Classical::B, 2, FrozenMode::Special),
        ] {
            let lin = verify_lineality(s).unwrap();
            assert!(lin.passed(), "{s}: {:?}", lin.failures);
            let rays = verify_rays(s).unwrap();
            assert!(rays.passed(), "{s}: {:?}", rays.failures);
        }
    }

    #[test]
    fn pentagon_routes_agree() {
        let routes = no_frozen_cone_two_ways(Classical::A, 2).unwrap();
        assert!(routes.equal);
        assert!(routes.direct.is_pointed());
        assert_eq!(routes.direct.rays().len(), 5);
    }
}
