//! Root-system model of a finite-type cluster algebra without frozen
//! variables.
//!
//! Cluster variables are the weights `c^k w_i` reached from each fundamental
//! weight before hitting some `-w_j`, where `c` is a Coxeter element.
//! Compatibility degrees are computed by transporting a pair along the
//! twist `tau` until the first entry is fundamental.

mod cartan;
mod exchange;
mod seed;

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::cluster::ClusterData;
use crate::error::{Error, Result};
use crate::exact::{rat, Matrix};

pub use cartan::{all_principal_minors_positive, cartan_matrix, CartanFamily, CartanType};
pub use exchange::{max_clique, RootExchange};
pub use seed::{build_bc, cartan_counterpart, is_finite_type, matrix_mutation, symmetrizer};

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = vec![0; n];
        w[i] = 1;
        Weight(w)
    }

    pub fn neg(&self) -> Self {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Weight) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `Some(i)` if this is the fundamental weight `w_i`.
    pub fn as_fundamental(&self) -> Option<usize> {
        let mut found = None;
        for (i, &x) in self.0.iter().enumerate() {
            match x {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// `Some(i)` if this is `-w_i`.
    pub fn as_negative_fundamental(&self) -> Option<usize> {
        self.neg().as_fundamental()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

const ORBIT_CAP: usize = 80;

/// The set of cluster weights for a Coxeter element, with the twist and the
/// compatibility degrees precomputed.
#[derive(Clone, Debug)]
pub struct RootModel {
    ctype: CartanType,
    order: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Matrix,
    weights: Vec<Weight>,
    heights: Vec<usize>,
    index: HashMap<Weight, usize>,
    tau: Vec<usize>,
    tau_inverse: Vec<usize>,
    compat: Vec<Vec<u32>>,
}

impl RootModel {
    /// Model for the Coxeter element `s_1 ... s_n`.
    pub fn new(ctype: CartanType) -> Result<Self> {
        RootModel::with_order(ctype, (0..ctype.rank()).collect())
    }

    /// Model for `c = s_{order[0]} ... s_{order[n-1]}` (zero-based indices).
    pub fn with_order(ctype: CartanType, order: Vec<usize>) -> Result<Self> {
        RootModel::from_cartan(ctype, cartan_matrix(ctype), order)
    }

    pub(crate) fn from_cartan(
        ctype: CartanType,
        cartan: Vec<Vec<i64>>,
        order: Vec<usize>,
    ) -> Result<Self> {
        let n = ctype.rank();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::ParameterOutOfRange(format!(
                "{order:?} is not a permutation of 0..{n}"
            )));
        }
        let cartan_inverse = cartan::to_matrix(&cartan)
            .inverse()
            .ok_or_else(|| Error::InvalidType(ctype.to_string()))?;
        let mut model = RootModel {
            ctype,
            order,
            cartan,
            cartan_inverse,
            weights: Vec::new(),
            heights: Vec::new(),
            index: HashMap::new(),
            tau: Vec::new(),
            tau_inverse: Vec::new(),
            compat: Vec::new(),
        };

        for i in 0..n {
            let mut lambda = Weight::fundamental(n, i);
            let mut steps = 0;
            loop {
                model.weights.push(lambda.clone());
                if lambda.as_negative_fundamental().is_some() {
                    break;
                }
                steps += 1;
                if steps > ORBIT_CAP {
                    return Err(Error::NonTermination(i));
                }
                lambda = model.apply_coxeter(&lambda);
            }
            model.heights.push(steps);
        }
        model.index = model
            .weights
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        if model.index.len() != model.weights.len() {
            return Err(Error::InvalidType(format!("{ctype}: repeated orbit weights")));
        }

        model.tau = (0..model.weights.len())
            .map(|k| {
                let image = model.tau_weight(&model.weights[k]);
                model.lookup(&image)
            })
            .collect::<Result<_>>()?;
        model.tau_inverse = vec![0; model.tau.len()];
        for (k, &t) in model.tau.iter().enumerate() {
            model.tau_inverse[t] = k;
        }

        let m = model.weights.len();
        model.compat = (0..m)
            .map(|a| (0..m).map(|b| model.c_compat_indices(a, b)).collect())
            .collect::<Result<_>>()?;
        Ok(model)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// `h(i; c)`: the number of Coxeter steps from `w_i` to some `-w_j`.
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn lookup(&self, w: &Weight) -> Result<usize> {
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| Error::WeightNotInPiC(w.0.clone()))
    }

    /// Simple reflection `s_i`: subtract `w_i`-coordinate times `a_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let li = lambda.0[i];
        Weight(
            lambda
                .0
                .iter()
                .enumerate()
                .map(|(j, &x)| x - li * self.cartan[j][i])
                .collect(),
        )
    }

    /// `c = s_{o1} ... s_{on}`, so `s_{on}` acts first.
    pub fn apply_coxeter(&self, lambda: &Weight) -> Weight {
        self.order
            .iter()
            .rev()
            .fold(lambda.clone(), |acc, &i| self.reflect(i, &acc))
    }

    pub fn apply_coxeter_inverse(&self, lambda: &Weight) -> Weight {
        self.order
            .iter()
            .fold(lambda.clone(), |acc, &i| self.reflect(i, &acc))
    }

    fn tau_weight(&self, lambda: &Weight) -> Weight {
        match lambda.as_negative_fundamental() {
            Some(i) => Weight::fundamental(self.rank(), i),
            None => self.apply_coxeter(lambda),
        }
    }

    pub fn tau(&self, lambda: &Weight) -> Result<Weight> {
        let k = self.lookup(lambda)?;
        Ok(self.weights[self.tau[k]].clone())
    }

    pub fn tau_inverse(&self, lambda: &Weight) -> Result<Weight> {
        let k = self.lookup(lambda)?;
        Ok(self.weights[self.tau_inverse[k]].clone())
    }

    /// The twist as a permutation of weight indices.
    pub fn tau_permutation(&self) -> &[usize] {
        &self.tau
    }

    pub fn tau_inverse_permutation(&self) -> &[usize] {
        &self.tau_inverse
    }

    /// Coordinates of `v` in the basis of simple roots.
    pub fn simple_root_coordinates(&self, v: &Weight) -> Vec<i64> {
        let x: Vec<_> = v.0.iter().map(|&c| rat(c)).collect();
        self.cartan_inverse
            .mul_vec(&x)
            .expect("rank matches")
            .into_iter()
            .map(|q| {
                assert!(q.is_integer(), "{v} is not in the root lattice");
                q.to_integer().to_i64().expect("small coordinate")
            })
            .collect()
    }

    fn c_compat_indices(&self, a: usize, b: usize) -> Result<u32> {
        let (mut lam, mut mu) = (a, b);
        let mut steps = 0;
        while self.weights[lam].as_fundamental().is_none() {
            lam = self.tau[lam];
            mu = self.tau[mu];
            steps += 1;
            if steps > self.weights.len() {
                return Err(Error::NonTermination(a));
            }
        }
        let i = self.weights[lam].as_fundamental().expect("loop exit");
        let second = &self.weights[mu];
        if second.as_fundamental().is_some() {
            return Ok(0);
        }
        let shifted = self.apply_coxeter_inverse(second);
        let diff = Weight(shifted.0.iter().zip(&second.0).map(|(x, y)| x - y).collect());
        let coeff = self.simple_root_coordinates(&diff)[i];
        Ok(coeff.max(0) as u32)
    }

    pub fn c_compat(&self, lambda: &Weight, mu: &Weight) -> Result<u32> {
        Ok(self.compat[self.lookup(lambda)?][self.lookup(mu)?])
    }

    pub fn compatibility_matrix(&self) -> &[Vec<u32>] {
        &self.compat
    }

    pub fn exchange(&self, lambda: usize, mu: usize) -> Result<RootExchange> {
        exchange::exchange_relation(self, lambda, mu)
    }

    /// All exchange relations, one per exchangeable pair.
    pub fn exchanges(&self) -> Result<Vec<RootExchange>> {
        let m = self.weights.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if self.compat[a][b] == 1 && self.compat[b][a] == 1 {
                    out.push(self.exchange(a, b)?);
                }
            }
        }
        Ok(out)
    }

    pub fn cluster_data(&self) -> Result<ClusterData> {
        let relations = self
            .exchanges()?
            .into_iter()
            .map(|e| e.into_relation())
            .collect();
        Ok(ClusterData {
            labels: self.weights.iter().map(|w| w.to_string()).collect(),
            n_cluster: self.weights.len(),
            n_frozen: 0,
            compat: self.compat.clone(),
            relations,
        })
    }

    /// Nonnegative integers `gamma` with `nu = sum_k gamma_k * weights[cluster[k]]`.
    pub(crate) fn decompose(&self, cluster: &[usize], nu: &Weight) -> Result<Vec<u32>> {
        let cols: Vec<Vec<crate::exact::Rat>> = cluster
            .iter()
            .map(|&k| self.weights[k].0.iter().map(|&x| rat(x)).collect())
            .collect();
        let a = Matrix::from_columns(self.rank(), &cols)?;
        let b: Vec<_> = nu.0.iter().map(|&x| rat(x)).collect();
        let x = crate::exact::solve_nonneg_int(&a, &b)?;
        Ok(x.iter()
            .map(|v| {
                debug_assert!(!v.is_negative());
                v.to_u32().expect("small exponent")
            })
            .collect())
    }

    /// Piecewise-linear extension of the twist to the whole weight lattice:
    /// decompose over a cluster whose cone contains `nu` and apply the twist
    /// to each member. `clusters` must be the clusters of this model.
    pub fn tau_on_lattice(&self, clusters: &[Vec<usize>], nu: &Weight, inverse: bool) -> Result<Weight> {
        let perm = if inverse { &self.tau_inverse } else { &self.tau };
        for cluster in clusters {
            if let Ok(gamma) = self.decompose(cluster, nu) {
                let mut out = Weight::zero(self.rank());
                for (&k, &g) in cluster.iter().zip(&gamma) {
                    let image = &self.weights[perm[k]];
                    for (o, x) in out.0.iter_mut().zip(&image.0) {
                        *o += g as i64 * x;
                    }
                }
                return Ok(out);
            }
        }
        Err(Error::WeightNotInPiC(nu.0.clone()))
    }
}
