//! Double description method for `{x : Hx >= 0, Ex = 0}`.
//!
//! The cone is first reduced to a pointed cone of full dimension: `Ex = 0`
//! is parametrized by an integer kernel basis, and the lineality directions
//! of the resulting constraint matrix are quotiented out by restricting to
//! its row space. Rays are then built incrementally, one inequality at a
//! time, using the combinatorial adjacency test on zero sets.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exact::{
    dot_int, int_kernel_basis, int_rank, primitive_int, primitive_rat, to_rat_vec, IntVec,
    Matrix, Rat,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bitset(Vec<u64>);

impl Bitset {
    pub(crate) fn new(bits: usize) -> Self {
        Bitset(vec![0; bits.div_ceil(64)])
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn and(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub(crate) fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn is_superset(&self, other: &Bitset) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

pub(crate) struct DdOutput {
    pub lineality: Vec<IntVec>,
    pub rays: Vec<IntVec>,
}

/// Generators of `{x in Q^dim : h.x >= 0 for h in ineqs, e.x = 0 for e in eqs}`.
///
/// Returned rays are primitive and pairwise distinct but not yet canonical
/// modulo the lineality space.
pub(crate) fn double_description(dim: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> DdOutput {
    let mut stacked: Vec<IntVec> = ineqs.to_vec();
    stacked.extend(eqs.iter().cloned());
    let lineality = int_kernel_basis(dim, &stacked);

    // Parametrize the equation subspace as x = K z.
    let basis: Vec<IntVec> = if eqs.is_empty() {
        (0..dim)
            .map(|i| {
                let mut e = vec![BigInt::zero(); dim];
                e[i] = BigInt::from(1);
                e
            })
            .collect()
    } else {
        int_kernel_basis(dim, eqs)
    };
    let k = basis.len();
    if k == 0 {
        return DdOutput {
            lineality,
            rays: Vec::new(),
        };
    }
    let reduced: Vec<IntVec> = ineqs
        .iter()
        .map(|h| basis.iter().map(|b| dot_int(h, b)).collect())
        .collect();

    // Restrict z to the row space of the reduced constraints, z = R^T y.
    let m = Matrix::from_int_rows(k, &reduced).expect("consistent widths");
    let (red, pivots) = m.rref();
    let r = pivots.len();
    if r == 0 {
        return DdOutput {
            lineality,
            rays: Vec::new(),
        };
    }
    let row_basis: Vec<IntVec> = (0..r).map(|i| primitive_rat(red.row(i))).collect();
    let constraints: Vec<IntVec> = reduced
        .iter()
        .map(|h| row_basis.iter().map(|b| dot_int(h, b)).collect())
        .collect();

    let rays_y = pointed_dd(r, &constraints);

    let lift = |y: &IntVec| -> IntVec {
        let z: IntVec = (0..k)
            .map(|c| (0..r).map(|i| &y[i] * &row_basis[i][c]).sum())
            .collect();
        let x: IntVec = (0..dim)
            .map(|c| (0..k).map(|j| &z[j] * &basis[j][c]).sum())
            .collect();
        primitive_int(&x)
    };
    let mut rays: Vec<IntVec> = rays_y.iter().map(lift).collect();
    rays.sort();
    rays.dedup();
    DdOutput { lineality, rays }
}

struct Ray {
    vector: IntVec,
    zeros: Bitset,
}

/// Extreme rays of a pointed cone `{y in Q^r : Ay >= 0}` where `A` has
/// rank `r`.
fn pointed_dd(r: usize, rows: &[IntVec]) -> Vec<IntVec> {
    let m = rows.len();

    // Greedily choose r independent rows to seed a simplicial cone.
    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    let mut chosen_rows: Vec<IntVec> = Vec::with_capacity(r);
    for (i, row) in rows.iter().enumerate() {
        if chosen.len() == r {
            break;
        }
        chosen_rows.push(row.clone());
        if int_rank(&chosen_rows) == chosen_rows.len() {
            chosen.push(i);
        } else {
            chosen_rows.pop();
        }
    }
    debug_assert_eq!(chosen.len(), r);

    let seed = Matrix::from_int_rows(r, &chosen_rows).expect("square seed");
    let inv = seed.inverse().expect("seed rows are independent");
    let mut processed = Bitset::new(m);
    for &i in &chosen {
        processed.insert(i);
    }
    let mut rays: Vec<Ray> = (0..r)
        .map(|j| {
            let col: Vec<Rat> = (0..r).map(|i| inv[(i, j)].clone()).collect();
            let vector = primitive_rat(&col);
            let mut zeros = Bitset::new(m);
            for (idx, &row) in chosen.iter().enumerate() {
                if idx != j {
                    zeros.insert(row);
                }
            }
            Ray { vector, zeros }
        })
        .collect();

    for (i, h) in rows.iter().enumerate() {
        if processed.contains(i) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|ray| dot_int(h, &ray.vector)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&j| values[j].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&j| values[j].is_negative()).collect();

        let mut created: Vec<Ray> = Vec::new();
        for &p in &positive {
            for &n in &negative {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if common.count() + 2 < r {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(t, ray)| {
                    t != p && t != n && ray.zeros.is_superset(&common)
                });
                if blocked {
                    continue;
                }
                let vector: IntVec = rays[n]
                    .vector
                    .iter()
                    .zip(&rays[p].vector)
                    .map(|(nv, pv)| &values[p] * nv - &values[n] * pv)
                    .collect();
                let mut zeros = common;
                zeros.insert(i);
                created.push(Ray {
                    vector: primitive_int(&vector),
                    zeros,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (j, mut ray) in rays.into_iter().enumerate() {
            if values[j].is_negative() {
                continue;
            }
            if values[j].is_zero() {
                ray.zeros.insert(i);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
        processed.insert(i);
    }

    rays.into_iter().map(|ray| ray.vector).collect()
}

/// Rows of the reduced row echelon form of the span of `vectors`, each
/// scaled to a primitive integer vector. This is the canonical basis of a
/// subspace.
pub(crate) fn canonical_basis(dim: usize, vectors: &[IntVec]) -> Vec<IntVec> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<Rat>> = vectors.iter().map(|v| to_rat_vec(v)).collect();
    let m = Matrix::from_rows(dim, &rows).expect("consistent widths");
    let (red, pivots) = m.rref();
    (0..pivots.len()).map(|i| primitive_rat(red.row(i))).collect()
}

/// Reduces `v` modulo the subspace with canonical basis `basis` by clearing
/// the pivot coordinates, then scales to a primitive vector. Positive
/// scaling only, so direction is preserved.
pub(crate) fn reduce_modulo(v: &[BigInt], basis: &[IntVec]) -> IntVec {
    let mut x: IntVec = v.to_vec();
    for b in basis {
        let Some(pivot) = b.iter().position(|e| !e.is_zero()) else {
            continue;
        };
        if x[pivot].is_zero() {
            continue;
        }
        // x <- b[p] * x - x[p] * b, with b[p] > 0
        let bp = b[pivot].clone();
        let xp = x[pivot].clone();
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi = &bp * &*xi - &xp * bi;
        }
    }
    primitive_int(&x)
}
