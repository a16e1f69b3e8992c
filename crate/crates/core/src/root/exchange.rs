//! Exchange relations in the root model.
//!
//! For an exchangeable pair the right-hand weights are the distinct values
//! of `tau^-k (tau^k l + tau^k m)`. Their monomials are found by decomposing
//! over the twisted images of a maximum common clique.

use super::{RootModel, Weight};
use crate::cluster::ExchangeRelation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootExchange {
    pub lambda: usize,
    pub mu: usize,
    /// `lambda + mu` first, then the other right-hand weight.
    pub weights: [Weight; 2],
    /// Exponent vectors of the two monomials over all cluster weights.
    pub exponents: [Vec<u32>; 2],
    pub primitive_terms: Vec<usize>,
}

impl RootExchange {
    pub fn is_primitive(&self) -> bool {
        !self.primitive_terms.is_empty()
    }

    pub fn into_relation(self) -> ExchangeRelation {
        let [a, b] = self.exponents;
        ExchangeRelation {
            exchanged: (self.lambda, self.mu),
            terms: [a, b],
            quad_type: None,
            primitive_terms: self.primitive_terms,
        }
    }
}

/// A maximum clique of the graph `adjacent` restricted to `vertices`. Ties
/// are broken towards the lexicographically smallest vertex list.
pub fn max_clique(adjacent: &dyn Fn(usize, usize) -> bool, vertices: &[usize]) -> Vec<usize> {
    fn grow(
        adjacent: &dyn Fn(usize, usize) -> bool,
        current: &mut Vec<usize>,
        candidates: &[usize],
        best: &mut Vec<usize>,
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        for (pos, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - pos <= best.len() {
                return;
            }
            let next: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&w| adjacent(v, w))
                .collect();
            current.push(v);
            grow(adjacent, current, &next, best);
            current.pop();
        }
    }
    let mut best = Vec::new();
    grow(adjacent, &mut Vec::new(), vertices, &mut best);
    best
}

pub(super) fn exchange_relation(model: &RootModel, a: usize, b: usize) -> Result<RootExchange> {
    let c = model.compatibility_matrix();
    if c[a][b] != 1 || c[b][a] != 1 {
        return Err(Error::NotExchangeable(a, b));
    }
    let m = model.weights().len();
    let n = model.rank();
    let compatible = |x: usize, y: usize| c[x][y] == 0 && c[y][x] == 0;
    let common: Vec<usize> = (0..m)
        .filter(|&k| k != a && k != b && compatible(k, a) && compatible(k, b))
        .collect();
    let clique = max_clique(&|x, y| compatible(x, y), &common);
    if clique.len() + 1 != n {
        return Err(Error::CliqueAmbiguity(a, b));
    }

    let tau = model.tau_permutation();
    let weights = model.weights();
    let mut found: Vec<Vec<u32>> = Vec::new();
    let (mut la, mut mb) = (a, b);
    let mut twisted: Vec<usize> = clique.clone();
    loop {
        let nu = weights[la].add(&weights[mb]);
        let mut basis = twisted.clone();
        basis.push(la);
        let gamma = model
            .decompose(&basis, &nu)
            .map_err(|_| Error::CliqueAmbiguity(a, b))?;
        if gamma[n - 1] != 0 {
            return Err(Error::CliqueAmbiguity(a, b));
        }
        let exps = gamma[..n - 1].to_vec();
        if !found.contains(&exps) {
            found.push(exps);
        }
        la = tau[la];
        mb = tau[mb];
        for s in twisted.iter_mut() {
            *s = tau[*s];
        }
        if la == a && mb == b {
            break;
        }
    }
    if found.len() == 1 {
        // Rank one: x x' = 1 + 1.
        found.push(found[0].clone());
    }
    if found.len() != 2 {
        return Err(Error::CliqueAmbiguity(a, b));
    }

    let to_full = |exps: &[u32]| -> (Weight, Vec<u32>) {
        let mut full = vec![0u32; m];
        let mut w = Weight::zero(n);
        for (&s, &g) in clique.iter().zip(exps) {
            full[s] += g;
            for (o, x) in w.0.iter_mut().zip(&weights[s].0) {
                *o += g as i64 * x;
            }
        }
        (w, full)
    };
    let (w0, e0) = to_full(&found[0]);
    let (w1, e1) = to_full(&found[1]);

    let primitive = tau[a] == b || tau[b] == a;
    let primitive_terms = if !primitive {
        Vec::new()
    } else {
        match (w0.is_zero(), w1.is_zero()) {
            (true, true) => vec![0, 1],
            (true, false) => vec![1],
            (false, true) => vec![0],
            (false, false) => return Err(Error::NotPrimitive(a)),
        }
    };
    Ok(RootExchange {
        lambda: a,
        mu: b,
        weights: [w0, w1],
        exponents: [e0, e1],
        primitive_terms,
    })
}
