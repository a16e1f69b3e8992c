//! Rational polyhedral cones with both representations kept in sync.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dd::{canonical_basis, double_description, reduce_modulo};
use crate::error::{Error, Result};
use crate::exact::{dot_int, int_kernel_basis, int_rank, primitive_rat, IntVec, Rat};

/// A cone `{x : f.x >= 0 for f in facets, e.x = 0 for e in equations}`,
/// equivalently `span(lineality) + cone(rays)`.
///
/// Lineality and equation bases are in reduced row echelon form. Rays are
/// primitive, reduced modulo the lineality space (pivot coordinates of the
/// lineality basis cleared) and sorted. Facets are primitive, irredundant and
/// reduced modulo the equations in the same way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    lineality: Vec<IntVec>,
    rays: Vec<IntVec>,
    facets: Vec<IntVec>,
    equations: Vec<IntVec>,
}

fn check_dims(dim: usize, vectors: &[IntVec]) -> Result<()> {
    match vectors.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

fn canonical_set(vectors: impl IntoIterator<Item = IntVec>) -> Vec<IntVec> {
    vectors
        .into_iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

impl Cone {
    /// The cone `{x : h.x >= 0, e.x = 0}`.
    pub fn from_inequalities(dim: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> Result<Cone> {
        check_dims(dim, ineqs)?;
        check_dims(dim, eqs)?;
        let dd = double_description(dim, ineqs, eqs);
        let lineality = canonical_basis(dim, &dd.lineality);
        let rays = canonical_set(dd.rays.iter().map(|r| reduce_modulo(r, &lineality)));

        let mut spanning = lineality.clone();
        spanning.extend(rays.iter().cloned());
        let equations = canonical_basis(dim, &int_kernel_basis(dim, &spanning));
        let span_dim = dim - equations.len();

        let facets = canonical_set(ineqs.iter().filter_map(|h| {
            let tight: Vec<&IntVec> = rays.iter().filter(|r| dot_int(h, r).is_zero()).collect();
            if tight.len() == rays.len() {
                return None;
            }
            let mut rows: Vec<IntVec> = lineality.clone();
            rows.extend(tight.into_iter().cloned());
            (int_rank(&rows) + 1 == span_dim).then(|| reduce_modulo(h, &equations))
        }));

        Ok(Cone {
            dim,
            lineality,
            rays,
            facets,
            equations,
        })
    }

    /// The cone `cone(gens) + span(lin)`.
    pub fn from_generators(dim: usize, gens: &[IntVec], lin: &[IntVec]) -> Result<Cone> {
        check_dims(dim, gens)?;
        check_dims(dim, lin)?;
        let dual = double_description(dim, gens, lin);
        let equations = canonical_basis(dim, &dual.lineality);
        let facets = canonical_set(dual.rays.iter().map(|f| reduce_modulo(f, &equations)));

        let mut normals = equations.clone();
        normals.extend(facets.iter().cloned());
        let lineality = canonical_basis(dim, &int_kernel_basis(dim, &normals));

        let rays = canonical_set(gens.iter().filter_map(|g| {
            let reduced = reduce_modulo(g, &lineality);
            if reduced.iter().all(Zero::is_zero) {
                return None;
            }
            let mut rows = equations.clone();
            rows.extend(facets.iter().filter(|f| dot_int(f, g).is_zero()).cloned());
            (int_rank(&rows) + 1 == dim - lineality.len()).then_some(reduced)
        }));

        Ok(Cone {
            dim,
            lineality,
            rays,
            facets,
            equations,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    /// Irredundant facet normals `f` with `f.x >= 0` on the cone.
    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    /// Basis of the orthogonal complement of the linear span.
    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    /// Representative of `v` modulo the lineality space, in the same
    /// canonical form as the stored rays. Zero iff `v` is a lineality vector.
    pub fn modulo_lineality(&self, v: &[BigInt]) -> Result<IntVec> {
        self.check_point(v)?;
        Ok(reduce_modulo(v, &self.lineality))
    }

    pub fn span_dim(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Simplicial modulo lineality: the rays are linearly independent there.
    pub fn is_simplicial(&self) -> bool {
        self.lineality.len() + self.rays.len() == self.span_dim()
    }

    /// `{y : y.x >= 0 for all x in self}`.
    pub fn dual(&self) -> Cone {
        Cone::from_generators(self.dim, &self.facets, &self.equations)
            .expect("own dimensions are consistent")
    }

    pub fn contains(&self, x: &[BigInt]) -> Result<bool> {
        self.check_point(x)?;
        Ok(self.equations.iter().all(|e| dot_int(e, x).is_zero())
            && self.facets.iter().all(|f| !dot_int(f, x).is_negative()))
    }

    pub fn contains_rational(&self, x: &[Rat]) -> Result<bool> {
        self.contains(&primitive_rat(x))
    }

    pub fn contains_relative_interior(&self, x: &[BigInt]) -> Result<bool> {
        self.check_point(x)?;
        Ok(self.equations.iter().all(|e| dot_int(e, x).is_zero())
            && self.facets.iter().all(|f| dot_int(f, x).is_positive()))
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains_cone(&self, other: &Cone) -> Result<bool> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        for r in &other.rays {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        for l in &other.lineality {
            let neg: IntVec = l.iter().map(|x| -x).collect();
            if !self.contains(l)? || !self.contains(&neg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersect_with_subspace(&self, eqs: &[IntVec]) -> Result<Cone> {
        check_dims(self.dim, eqs)?;
        let mut all = self.equations.clone();
        all.extend(eqs.iter().cloned());
        Cone::from_inequalities(self.dim, &self.facets, &all)
    }

    /// Image under the coordinate projection onto `indices`, in that order.
    pub fn project_coordinates(&self, indices: &[usize]) -> Result<Cone> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.dim) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.dim,
            });
        }
        let project = |v: &IntVec| -> IntVec { indices.iter().map(|&i| v[i].clone()).collect() };
        let gens: Vec<IntVec> = self.rays.iter().map(project).collect();
        let lin: Vec<IntVec> = self.lineality.iter().map(project).collect();
        Cone::from_generators(indices.len(), &gens, &lin)
    }

    fn check_point(&self, x: &[BigInt]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(())
    }
}

/// Equality as point sets, via mutual containment.
pub fn cones_equal(a: &Cone, b: &Cone) -> Result<bool> {
    Ok(a.lineality.len() == b.lineality.len() && a.contains_cone(b)? && b.contains_cone(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_vec;

    fn quadrant() -> Cone {
        Cone::from_generators(2, &[int_vec(&[1, 0]), int_vec(&[0, 1])], &[]).unwrap()
    }

    #[test]
    fn quadrant_is_self_dual() {
        let q = quadrant();
        assert_eq!(q.rays(), &[int_vec(&[0, 1]), int_vec(&[1, 0])]);
        assert!(q.lineality().is_empty());
        assert!(cones_equal(&q.dual(), &q).unwrap());
        assert_eq!(q.dual(), q);
    }

    #[test]
    fn opposite_generators_give_a_line() {
        let c = Cone::from_generators(2, &[int_vec(&[1, 0]), int_vec(&[-1, 0])], &[]).unwrap();
        assert_eq!(c.lineality(), &[int_vec(&[1, 0])]);
        assert!(c.rays().is_empty());
        assert_eq!(c.equations(), &[int_vec(&[0, 1])]);
    }

    #[test]
    fn full_plane() {
        let gens = [
            int_vec(&[1, 0]),
            int_vec(&[-1, 0]),
            int_vec(&[0, 1]),
            int_vec(&[0, -1]),
        ];
        let c = Cone::from_generators(2, &gens, &[]).unwrap();
        assert_eq!(c.lineality().len(), 2);
        assert!(c.rays().is_empty());
        assert!(c.facets().is_empty());
    }

    #[test]
    fn dual_of_skewed_cone() {
        let c = Cone::from_generators(2, &[int_vec(&[1, 0]), int_vec(&[1, 1])], &[]).unwrap();
        let expected =
            Cone::from_generators(2, &[int_vec(&[0, 1]), int_vec(&[1, -1])], &[]).unwrap();
        assert!(cones_equal(&c.dual(), &expected).unwrap());
        assert_eq!(c.dual().rays(), &[int_vec(&[0, 1]), int_vec(&[1, -1])]);
    }

    #[test]
    fn membership_and_interior() {
        let q = quadrant();
        assert!(q.contains(&int_vec(&[1, 1])).unwrap());
        assert!(q.contains_relative_interior(&int_vec(&[1, 1])).unwrap());
        assert!(q.contains(&int_vec(&[1, 0])).unwrap());
        assert!(!q.contains_relative_interior(&int_vec(&[1, 0])).unwrap());
        assert!(!q.contains(&int_vec(&[-1, 0])).unwrap());
        assert!(matches!(
            q.contains(&int_vec(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quadrant_differs_from_half_plane() {
        let half = Cone::from_inequalities(2, &[int_vec(&[0, 1])], &[]).unwrap();
        assert!(!cones_equal(&quadrant(), &half).unwrap());
        assert!(half.contains_cone(&quadrant()).unwrap());
    }

    #[test]
    fn intersection_with_axis() {
        let c = quadrant().intersect_with_subspace(&[int_vec(&[1, 0])]).unwrap();
        assert_eq!(c.rays(), &[int_vec(&[0, 1])]);
        assert!(c.lineality().is_empty());
    }

    #[test]
    fn projection_of_space_is_plane() {
        let space = Cone::from_inequalities(3, &[], &[]).unwrap();
        assert_eq!(space.lineality().len(), 3);
        let p = space.project_coordinates(&[0, 2]).unwrap();
        assert_eq!(p.lineality().len(), 2);
        assert!(p.rays().is_empty());
    }

    #[test]
    fn redundant_inequalities_are_dropped() {
        let c = Cone::from_inequalities(
            2,
            &[int_vec(&[1, 0]), int_vec(&[0, 1]), int_vec(&[1, 1]), int_vec(&[2, 0])],
            &[],
        )
        .unwrap();
        assert_eq!(c.facets(), &[int_vec(&[0, 1]), int_vec(&[1, 0])]);
    }

    #[test]
    fn point_cone() {
        let c = Cone::from_generators(3, &[], &[]).unwrap();
        assert!(c.rays().is_empty());
        assert_eq!(c.equations().len(), 3);
        assert!(c.contains(&int_vec(&[0, 0, 0])).unwrap());
        assert!(!c.contains(&int_vec(&[0, 1, 0])).unwrap());
        assert_eq!(c.dual().lineality().len(), 3);
    }
}
